//! The six gadget graphs with canonical vertex numbering.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use geom_graph::{udg_from_points, Graph, Point2};

use crate::interior::{INTERIOR_NUDGES, N2_POSITION, VARIABLE_INTERIOR};

/// Number of vertices on every variable-gadget path: `j = 0..=14`.
pub const VARIABLE_PATH_LEN: usize = 15;
/// Number of vertices on every clause-gadget path: `j = 1..=15`.
pub const CLAUSE_PATH_LEN: usize = 15;
/// Number of vertices on each of the two edge-gadget paths.
pub const EDGE_PATH_LEN: usize = 37;

/// Which gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetKind {
    /// Variable with three occurrences.
    G3v,
    /// Variable with two occurrences; path pair 3 is absent.
    G2va,
    /// Variable with two occurrences; path pair 2 is absent.
    G2vb,
    /// Clause with three literals.
    G3c,
    /// Clause with two literals; path pair 3 is absent.
    G2c,
    /// Edge gadget.
    Ge,
}

impl GadgetKind {
    pub const ALL: [GadgetKind; 6] =
        [GadgetKind::G3v, GadgetKind::G2va, GadgetKind::G2vb, GadgetKind::G3c, GadgetKind::G2c, GadgetKind::Ge];

    pub fn is_variable(self) -> bool {
        matches!(self, GadgetKind::G3v | GadgetKind::G2va | GadgetKind::G2vb)
    }

    pub fn is_clause(self) -> bool {
        matches!(self, GadgetKind::G3c | GadgetKind::G2c)
    }

    /// Path-pair indices present in the gadget.
    pub fn pair_indices(self) -> &'static [usize] {
        match self {
            GadgetKind::G3v | GadgetKind::G3c => &[1, 2, 3],
            GadgetKind::G2va | GadgetKind::G2c => &[1, 2],
            GadgetKind::G2vb => &[1, 3],
            GadgetKind::Ge => &[1, 2],
        }
    }
}

impl fmt::Display for GadgetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GadgetKind::G3v => "G3v",
            GadgetKind::G2va => "G2va",
            GadgetKind::G2vb => "G2vb",
            GadgetKind::G3c => "G3c",
            GadgetKind::G2c => "G2c",
            GadgetKind::Ge => "Ge",
        };
        f.write_str(name)
    }
}

/// Mark of a (t,f)-vertex pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Polarity {
    /// ⊕: the variable occurs positively along this pair.
    Plus,
    /// ⊖: the variable occurs negated along this pair.
    Minus,
    /// ∅: clause and edge gadget pairs.
    Unmarked,
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Polarity::Plus => "⊕",
            Polarity::Minus => "⊖",
            Polarity::Unmarked => "∅",
        })
    }
}

/// A (t,f)-vertex pair: the two path ends that are identified with another
/// gadget's pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TfPair {
    /// Path-pair index `i` (for the edge gadget: 1 at the `t1` end, 2 at the
    /// `t37` end).
    pub index: usize,
    pub t: usize,
    pub f: usize,
    pub polarity: Polarity,
}

/// A gadget graph with named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub kind: GadgetKind,
    pub graph: Graph,
    names: Vec<String>,
    ids: HashMap<String, usize>,
    pub pairs: Vec<TfPair>,
}

impl Gadget {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    /// The label of vertex `v`, e.g. `T1`, `a2`, `t3_14`, `w1`.
    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The vertex with the given label.
    pub fn id(&self, name: &str) -> Option<usize> {
        self.ids.get(name).copied()
    }

    /// Like [`Gadget::id`] for labels known to exist.
    pub fn vertex(&self, name: &str) -> usize {
        self.id(name).unwrap_or_else(|| panic!("{} has no vertex {name}", self.kind))
    }

    /// The pair with path index `index`.
    pub fn pair(&self, index: usize) -> Option<&TfPair> {
        self.pairs.iter().find(|p| p.index == index)
    }

    /// Whether `v` belongs to some (t,f)-vertex pair.
    pub fn is_tf_vertex(&self, v: usize) -> bool {
        self.pairs.iter().any(|p| p.t == v || p.f == v)
    }
}

/// Vertex labels in canonical order.
pub fn vertex_labels(kind: GadgetKind) -> Vec<String> {
    let mut labels: Vec<String> = Vec::new();
    match kind {
        GadgetKind::G3v | GadgetKind::G2va | GadgetKind::G2vb => {
            labels.extend(["T1", "T2", "N1", "N2", "F", "a1", "b1", "a2", "b2", "a3", "b3"].map(String::from));
            for i in 1..=3 {
                let full = kind.pair_indices().contains(&i);
                let last = if full { VARIABLE_PATH_LEN } else { 1 };
                for lab in ["t", "f"] {
                    labels.extend((0..last).map(|j| format!("{lab}{i}_{j}")));
                }
            }
        }
        GadgetKind::G3c | GadgetKind::G2c => {
            labels.push("m".into());
            labels.push("w1".into());
            labels.push("w2".into());
            for c in clause_children(kind) {
                labels.push(format!("c{}", c.0));
            }
            for &i in kind.pair_indices() {
                for lab in ["t", "f"] {
                    labels.extend((1..=CLAUSE_PATH_LEN).map(|j| format!("{lab}{i}_{j}")));
                }
            }
        }
        GadgetKind::Ge => {
            for lab in ["t", "f"] {
                labels.extend((1..=EDGE_PATH_LEN).map(|k| format!("{lab}{k}")));
            }
        }
    }
    labels
}

/// Clause children as `(c index, parent w index, pair index)`.
fn clause_children(kind: GadgetKind) -> Vec<(usize, usize, usize)> {
    let all = [(1, 1, 1), (2, 1, 3), (3, 2, 2)];
    all.into_iter().filter(|&(_, _, pair)| kind.pair_indices().contains(&pair)).collect()
}

/// The interior coordinates of the variable gadget as used by every
/// variable tile: the tabulated values with the nudges applied, plus `N2`.
pub fn variable_interior() -> Vec<(&'static str, Point2)> {
    let mut out: Vec<(&'static str, Point2)> = VARIABLE_INTERIOR
        .iter()
        .map(|r| {
            let (x, y) = INTERIOR_NUDGES.iter().find(|n| n.0 == r.label).map_or((r.x, r.y), |n| (n.1, n.2));
            (r.label, Point2::parse(x, y).expect("interior coordinates are valid decimals"))
        })
        .collect();
    out.push(("N2", Point2::parse(N2_POSITION.0, N2_POSITION.1).expect("valid decimal")));
    out
}

fn build(kind: GadgetKind) -> Gadget {
    let names = vertex_labels(kind);
    let ids: HashMap<String, usize> = names.iter().enumerate().map(|(i, n)| (n.clone(), i)).collect();
    let id = |s: &str| ids[s];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut pairs = Vec::new();
    match kind {
        GadgetKind::G3v | GadgetKind::G2va | GadgetKind::G2vb => {
            let interior: Vec<(&str, Point2)> =
                variable_interior().into_iter().filter(|(label, _)| ids.contains_key(*label)).collect();
            let points: Vec<Point2> = interior.iter().map(|p| p.1).collect();
            let udg = udg_from_points(&points).expect("interior points are distinct");
            for &(u, v) in udg.graph().edges() {
                edges.push((id(interior[u].0), id(interior[v].0)));
            }
            for &i in kind.pair_indices() {
                for lab in ["t", "f"] {
                    for j in 1..VARIABLE_PATH_LEN - 1 {
                        edges.push((id(&format!("{lab}{i}_{j}")), id(&format!("{lab}{i}_{}", j + 1))));
                    }
                }
                let last = VARIABLE_PATH_LEN - 1;
                pairs.push(TfPair {
                    index: i,
                    t: id(&format!("t{i}_{last}")),
                    f: id(&format!("f{i}_{last}")),
                    polarity: if i == 1 { Polarity::Minus } else { Polarity::Plus },
                });
            }
        }
        GadgetKind::G3c | GadgetKind::G2c => {
            for w in ["w1", "w2"] {
                edges.push((id("m"), id(w)));
            }
            for (c, w, pair) in clause_children(kind) {
                edges.push((id(&format!("w{w}")), id(&format!("c{c}"))));
                edges.push((id(&format!("c{c}")), id(&format!("t{pair}_1"))));
            }
            for &i in kind.pair_indices() {
                edges.push((id("m"), id(&format!("f{i}_1"))));
                for lab in ["t", "f"] {
                    for j in 1..CLAUSE_PATH_LEN {
                        edges.push((id(&format!("{lab}{i}_{j}")), id(&format!("{lab}{i}_{}", j + 1))));
                    }
                }
                pairs.push(TfPair {
                    index: i,
                    t: id(&format!("t{i}_{CLAUSE_PATH_LEN}")),
                    f: id(&format!("f{i}_{CLAUSE_PATH_LEN}")),
                    polarity: Polarity::Unmarked,
                });
            }
        }
        GadgetKind::Ge => {
            for lab in ["t", "f"] {
                for k in 1..EDGE_PATH_LEN {
                    edges.push((id(&format!("{lab}{k}")), id(&format!("{lab}{}", k + 1))));
                }
            }
            pairs.push(TfPair { index: 1, t: id("t1"), f: id("f1"), polarity: Polarity::Unmarked });
            let last = EDGE_PATH_LEN;
            pairs.push(TfPair { index: 2, t: id(&format!("t{last}")), f: id(&format!("f{last}")), polarity: Polarity::Unmarked });
        }
    }
    let graph = Graph::from_edges(names.len(), edges).expect("gadget wiring is simple");
    Gadget { kind, graph, names, ids, pairs }
}

/// Builds a gadget. Variable interiors are wired by the unit-disk rule on
/// their coordinates; paths, clause wiring and the edge gadget are fixed.
pub fn make_gadget(kind: GadgetKind) -> Gadget {
    build(kind)
}

/// A shared, lazily built copy of each gadget.
pub fn gadget(kind: GadgetKind) -> &'static Gadget {
    static CACHE: OnceLock<Vec<Gadget>> = OnceLock::new();
    let all = CACHE.get_or_init(|| GadgetKind::ALL.iter().map(|&k| build(k)).collect());
    &all[GadgetKind::ALL.iter().position(|&k| k == kind).expect("listed kind")]
}
