//! Placing tiles in the plane and identifying matching (t,f)-vertex pairs.

use std::collections::HashMap;

use gadgets::{GadgetKind, Region};
use geom_graph::{Graph, Point2};
use orthodraw::Drawing;
use sat3::{shorten_edge_paths, SatInstance};

use crate::placement::{conflicts, resolve_orientation_conflicts, select_tiles, Placement};
use crate::AssemblyError;

/// Distance in units between neighbouring grid points of the drawing.
pub const CELL_PITCH: i64 = 24;

/// What a gadget copy stands for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Owner {
    Variable(usize),
    Clause(usize),
    /// The edge gadget of route `route`.
    Edge { route: usize, variable: usize, clause: usize },
}

/// One placed gadget and the global id of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetCopy {
    pub kind: GadgetKind,
    pub owner: Owner,
    pub variant: String,
    pub region: Region,
    pub origin: (i64, i64),
    /// Gadget vertex → vertex of the assembled graph.
    pub vertices: Vec<usize>,
}

impl GadgetCopy {
    /// The global id of the named gadget vertex.
    pub fn vertex(&self, name: &str) -> Option<usize> {
        gadgets::gadget(self.kind).id(name).map(|v| self.vertices[v])
    }
}

/// A vertex of the assembled graph formed from two pair vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Identification {
    pub vertex: usize,
    /// `(copy, gadget vertex)` of the vertex kept and of the vertex merged in.
    pub kept: (usize, usize),
    pub merged: (usize, usize),
}

/// The assembled graph with its embedding and bookkeeping.
#[derive(Clone, Debug)]
pub struct Assembly {
    /// The shortened instance the graph encodes.
    pub instance: SatInstance,
    pub drawing: Drawing,
    pub placement: Placement,
    pub graph: Graph,
    pub points: Vec<Point2>,
    /// `<copy>.<label>` for every vertex.
    pub names: Vec<String>,
    pub copies: Vec<GadgetCopy>,
    /// Copy index of each variable, clause and route.
    pub variable_copies: Vec<usize>,
    pub clause_copies: Vec<usize>,
    pub edge_copies: Vec<usize>,
    pub identifications: Vec<Identification>,
    /// `4·|X′|`: the resolving-set size matching satisfiability.
    pub budget: usize,
}

impl Assembly {
    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    pub fn embedded(&self) -> geom_graph::EmbeddedGraph {
        geom_graph::EmbeddedGraph::new(self.graph.clone(), self.points.clone()).expect("one point per vertex")
    }

    pub fn variable_copy(&self, x: usize) -> &GadgetCopy {
        &self.copies[self.variable_copies[x]]
    }

    pub fn clause_copy(&self, c: usize) -> &GadgetCopy {
        &self.copies[self.clause_copies[c]]
    }

    /// The variable attached to pair `index` of clause `c`.
    pub fn clause_pair_variable(&self, c: usize, index: usize) -> Option<usize> {
        let copy = self.clause_copy(c);
        let g = gadgets::gadget(copy.kind);
        let pair = g.pair(index)?;
        let t = copy.vertices[pair.t];
        self.identifications.iter().find(|id| id.vertex == t).and_then(|id| {
            let other = if id.kept.0 == self.clause_copies[c] { id.merged.0 } else { id.kept.0 };
            match self.copies[other].owner {
                Owner::Edge { variable, .. } => Some(variable),
                _ => None,
            }
        })
    }
}

fn copy_prefix(owner: Owner) -> String {
    match owner {
        Owner::Variable(x) => format!("x{x}"),
        Owner::Clause(c) => format!("c{c}"),
        Owner::Edge { route, .. } => format!("e{route}"),
    }
}

/// Places every tile at its origin and merges each edge-gadget pair with the
/// pair occupying the same slot positions.
pub fn assemble(placement: Placement, psi: &SatInstance, drawing: &Drawing) -> Result<Assembly, AssemblyError> {
    if let Some(c) = conflicts(&placement).first() {
        return Err(AssemblyError::ResidualConflict(c.to_string()));
    }
    let mut points: Vec<Point2> = Vec::new();
    let mut names: Vec<String> = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut copies: Vec<GadgetCopy> = Vec::new();
    let mut identifications = Vec::new();
    // Pair vertices of variable and clause copies by position.
    let mut ports: HashMap<Point2, (usize, usize)> = HashMap::new();

    let mut place = |owner: Owner,
                     placed: &crate::PlacedTile,
                     copies: &mut Vec<GadgetCopy>,
                     identifications: &mut Vec<Identification>|
     -> Result<usize, AssemblyError> {
        let tile = &placed.tile;
        let g = tile.gadget();
        let offset = Point2::from_int(placed.origin.0, placed.origin.1);
        let index = copies.len();
        let prefix = copy_prefix(owner);
        let mut vertices = Vec::with_capacity(g.vertex_count());
        for v in 0..g.vertex_count() {
            let at = tile.point(v) + offset;
            let global = if matches!(owner, Owner::Edge { .. }) && g.is_tf_vertex(v) {
                let &(copy, w) = ports.get(&at).ok_or_else(|| {
                    AssemblyError::Identification(format!("{prefix}.{} at {at} meets no pair vertex", g.name(v)))
                })?;
                let other = &copies[copy];
                let other_name = gadgets::gadget(other.kind).name(w);
                if other_name.as_bytes()[0] != g.name(v).as_bytes()[0] {
                    return Err(AssemblyError::Identification(format!(
                        "{prefix}.{} meets {}.{other_name} at {at}",
                        g.name(v),
                        copy_prefix(other.owner)
                    )));
                }
                let id = other.vertices[w];
                identifications.push(Identification { vertex: id, kept: (copy, w), merged: (index, v) });
                ports.remove(&at);
                id
            } else {
                let id = points.len();
                points.push(at);
                names.push(format!("{prefix}.{}", g.name(v)));
                if !matches!(owner, Owner::Edge { .. }) && g.is_tf_vertex(v) {
                    ports.insert(at, (index, v));
                }
                id
            };
            vertices.push(global);
        }
        for &(u, v) in g.graph.edges() {
            edges.push((vertices[u], vertices[v]));
        }
        copies.push(GadgetCopy {
            kind: tile.kind,
            owner,
            variant: tile.variant.clone(),
            region: tile.region,
            origin: placed.origin,
            vertices,
        });
        Ok(index)
    };

    let mut variable_copies = Vec::new();
    for (x, placed) in placement.variables.iter().enumerate() {
        variable_copies.push(place(Owner::Variable(x), placed, &mut copies, &mut identifications)?);
    }
    let mut clause_copies = Vec::new();
    for (c, placed) in placement.clauses.iter().enumerate() {
        clause_copies.push(place(Owner::Clause(c), placed, &mut copies, &mut identifications)?);
    }
    let mut edge_copies = Vec::new();
    for (k, placed) in placement.edges.iter().enumerate() {
        let r = &placement.routes[k];
        let owner = Owner::Edge { route: k, variable: r.variable, clause: r.clause };
        edge_copies.push(place(owner, placed, &mut copies, &mut identifications)?);
    }
    if let Some((at, &(copy, w))) = ports.iter().next() {
        return Err(AssemblyError::Identification(format!(
            "{}.{} at {at} left unmatched",
            copy_prefix(copies[copy].owner),
            gadgets::gadget(copies[copy].kind).name(w)
        )));
    }
    let graph = Graph::from_edges(points.len(), edges).map_err(|e| AssemblyError::Identification(e.to_string()))?;
    Ok(Assembly {
        instance: psi.clone(),
        drawing: drawing.clone(),
        placement,
        graph,
        points,
        names,
        copies,
        variable_copies,
        clause_copies,
        edge_copies,
        identifications,
        budget: 4 * psi.variable_count(),
    })
}

/// Shortens the drawing, selects tiles, resolves conflicts and assembles.
pub fn build(psi: &SatInstance, drawing: &Drawing) -> Result<Assembly, AssemblyError> {
    let (short, short_drawing) = shorten_edge_paths(psi, drawing)?;
    let placement = resolve_orientation_conflicts(select_tiles(&short, &short_drawing)?)?;
    assemble(placement, &short, &short_drawing)
}
