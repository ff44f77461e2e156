//! Embedded graphs, unit disk edge derivation and Gabriel validation.

use std::collections::HashMap;
use std::fmt;

use crate::error::GeomError;
use crate::fixed::{format_dist2, Fixed, Point2, SCALE, UNIT_SQ};
use crate::graph::Graph;

/// A graph together with an injective placement of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EmbeddedGraph {
    graph: Graph,
    points: Vec<Point2>,
}

impl EmbeddedGraph {
    /// Pairs a graph with one point per vertex; points must be distinct.
    pub fn new(graph: Graph, points: Vec<Point2>) -> Result<Self, GeomError> {
        if graph.vertex_count() != points.len() {
            return Err(GeomError::LengthMismatch { vertices: graph.vertex_count(), points: points.len() });
        }
        if let Some((first, second)) = first_duplicate(&points) {
            return Err(GeomError::DuplicatePoint { first, second });
        }
        Ok(EmbeddedGraph { graph, points })
    }

    /// The underlying graph.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// All vertex positions indexed by vertex id.
    pub fn points(&self) -> &[Point2] {
        &self.points
    }

    /// Position of vertex `v`.
    pub fn point(&self, v: usize) -> Point2 {
        self.points[v]
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.points.len()
    }

    /// Splits into graph and embedding.
    pub fn into_parts(self) -> (Graph, Vec<Point2>) {
        (self.graph, self.points)
    }
}

fn first_duplicate(points: &[Point2]) -> Option<(usize, usize)> {
    let mut seen: HashMap<Point2, usize> = HashMap::with_capacity(points.len());
    let mut best: Option<(usize, usize)> = None;
    for (i, p) in points.iter().enumerate() {
        if let Some(&j) = seen.get(p) {
            if best.is_none_or(|b| (j, i) < b) {
                best = Some((j, i));
            }
        } else {
            seen.insert(*p, i);
        }
    }
    best
}

/// All index pairs `(u, v)`, `u < v`, whose squared distance is at most
/// `reach²` (with `reach` in scaled units), sorted, with their squared
/// distances. Uses a uniform bucket grid of cell size `reach`.
pub fn pairs_within(points: &[Point2], reach: i64) -> Vec<(usize, usize, i128)> {
    let cell = reach.max(1);
    let reach_sq = i128::from(reach) * i128::from(reach);
    let key = |p: &Point2| (p.x.raw().div_euclid(cell), p.y.raw().div_euclid(cell));
    let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
    for (i, p) in points.iter().enumerate() {
        buckets.entry(key(p)).or_default().push(i);
    }
    let mut out = Vec::new();
    for (u, p) in points.iter().enumerate() {
        let (cx, cy) = key(p);
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(bucket) = buckets.get(&(cx + dx, cy + dy)) else { continue };
                for &v in bucket {
                    if v > u {
                        let d2 = p.dist2(points[v]);
                        if d2 <= reach_sq {
                            out.push((u, v, d2));
                        }
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// Builds the unit disk graph of a point set: `{u, v}` is an edge iff the
/// points are at distance at most one, boundary included.
pub fn udg_from_points(points: &[Point2]) -> Result<EmbeddedGraph, GeomError> {
    if let Some((first, second)) = first_duplicate(points) {
        return Err(GeomError::DuplicatePoint { first, second });
    }
    let edges = pairs_within(points, SCALE).into_iter().map(|(u, v, _)| (u, v));
    let graph = Graph::from_edges(points.len(), edges)?;
    EmbeddedGraph::new(graph, points.to_vec())
}

/// The smallest-id vertex `w` that lies in the closed disk with diameter
/// `uv`, i.e. `|uw|² + |wv|² ≤ |uv|²`, if any.
pub fn gabriel_witness(points: &[Point2], u: usize, v: usize) -> Option<usize> {
    let (pu, pv) = (points[u], points[v]);
    let uv = pu.dist2(pv);
    (0..points.len()).find(|&w| w != u && w != v && pu.dist2(points[w]) + points[w].dist2(pv) <= uv)
}

/// Edges of `g` that are Gabriel edges with respect to all vertices of `g`.
pub fn gabriel_edges(g: &EmbeddedGraph) -> Vec<(usize, usize)> {
    let index = WitnessIndex::new(g.points());
    g.graph().edges().iter().copied().filter(|&(u, v)| index.witness(u, v).is_none()).collect()
}

/// Bucket index accelerating witness searches for short edges.
struct WitnessIndex<'a> {
    points: &'a [Point2],
    buckets: HashMap<(i64, i64), Vec<usize>>,
}

impl<'a> WitnessIndex<'a> {
    fn new(points: &'a [Point2]) -> Self {
        let mut buckets: HashMap<(i64, i64), Vec<usize>> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            buckets.entry(Self::key(p)).or_default().push(i);
        }
        for bucket in buckets.values_mut() {
            bucket.sort_unstable();
        }
        WitnessIndex { points, buckets }
    }

    fn key(p: &Point2) -> (i64, i64) {
        (p.x.raw().div_euclid(SCALE), p.y.raw().div_euclid(SCALE))
    }

    /// Smallest-id witness against `{u, v}` being Gabriel.
    fn witness(&self, u: usize, v: usize) -> Option<usize> {
        let (pu, pv) = (self.points[u], self.points[v]);
        let uv = pu.dist2(pv);
        if uv > UNIT_SQ {
            return gabriel_witness(self.points, u, v);
        }
        // Every witness lies within distance |uv| <= 1 of u.
        let (cx, cy) = Self::key(&pu);
        let mut best: Option<usize> = None;
        for dx in -1..=1 {
            for dy in -1..=1 {
                let Some(bucket) = self.buckets.get(&(cx + dx, cy + dy)) else { continue };
                for &w in bucket {
                    if w == u || w == v || best.is_some_and(|b| b <= w) {
                        continue;
                    }
                    let pw = self.points[w];
                    if pu.dist2(pw) + pw.dist2(pv) <= uv {
                        best = Some(w);
                    }
                }
            }
        }
        best
    }
}

/// One reason an embedding fails to certify a Gabriel unit disk graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GudgViolation {
    /// Two vertices at distance at most one are not adjacent.
    MissingEdge { u: usize, v: usize, dist2: i128 },
    /// Two adjacent vertices are farther apart than one.
    LongEdge { u: usize, v: usize, dist2: i128 },
    /// Two non-adjacent vertices are closer than `1 + margin`.
    Margin { u: usize, v: usize, dist2: i128 },
    /// An edge has a vertex in its diametral disk.
    NonGabriel { u: usize, v: usize, witness: usize },
}

impl fmt::Display for GudgViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GudgViolation::MissingEdge { u, v, dist2 } => {
                write!(f, "missing unit disk edge {{{u}, {v}}} at squared distance {}", format_dist2(dist2))
            }
            GudgViolation::LongEdge { u, v, dist2 } => {
                write!(f, "edge {{{u}, {v}}} too long: squared distance {}", format_dist2(dist2))
            }
            GudgViolation::Margin { u, v, dist2 } => {
                write!(f, "non-edge {{{u}, {v}}} inside margin: squared distance {}", format_dist2(dist2))
            }
            GudgViolation::NonGabriel { u, v, witness } => {
                write!(f, "edge {{{u}, {v}}} not Gabriel: vertex {witness} lies in its diametral disk")
            }
        }
    }
}

/// Outcome of [`is_gudg_embedding`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GudgReport {
    /// Every violation found, in deterministic order.
    pub violations: Vec<GudgViolation>,
}

impl GudgReport {
    /// Whether no violation was found.
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `g` is exactly the unit disk graph of its embedding, that
/// non-adjacent vertices are at least `1 + margin` apart and that every edge
/// is Gabriel.
pub fn is_gudg_embedding(g: &EmbeddedGraph, margin: Fixed) -> GudgReport {
    let points = g.points();
    let graph = g.graph();
    let mut violations = Vec::new();
    let reach = SCALE + margin.raw().max(0);
    let reach_sq = i128::from(reach) * i128::from(reach);
    for (u, v, dist2) in pairs_within(points, reach) {
        if graph.has_edge(u, v) {
            continue;
        }
        if dist2 <= UNIT_SQ {
            violations.push(GudgViolation::MissingEdge { u, v, dist2 });
        } else if dist2 < reach_sq {
            violations.push(GudgViolation::Margin { u, v, dist2 });
        }
    }
    let index = WitnessIndex::new(points);
    for &(u, v) in graph.edges() {
        let dist2 = points[u].dist2(points[v]);
        if dist2 > UNIT_SQ {
            violations.push(GudgViolation::LongEdge { u, v, dist2 });
        }
        if let Some(witness) = index.witness(u, v) {
            violations.push(GudgViolation::NonGabriel { u, v, witness });
        }
    }
    GudgReport { violations }
}
