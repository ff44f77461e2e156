use std::collections::BTreeMap;
use std::fmt;

use crate::DrawError;

/// An integer grid point.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

impl GridPoint {
    pub const fn new(x: i64, y: i64) -> Self {
        GridPoint { x, y }
    }

    /// Manhattan distance.
    pub fn manhattan(self, other: GridPoint) -> i64 {
        (self.x - other.x).abs() + (self.y - other.y).abs()
    }

    /// The four grid neighbours: right, left, up, down.
    pub fn neighbors(self) -> [GridPoint; 4] {
        let GridPoint { x, y } = self;
        [GridPoint::new(x + 1, y), GridPoint::new(x - 1, y), GridPoint::new(x, y + 1), GridPoint::new(x, y - 1)]
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A sequence of grid points drawing one arc. Its length is the number of
/// unit steps, one less than the number of points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct EdgePath {
    pub points: Vec<GridPoint>,
}

impl EdgePath {
    pub fn new(points: Vec<GridPoint>) -> Self {
        EdgePath { points }
    }

    /// Number of unit steps.
    pub fn len(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    /// Whether the path has no steps.
    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn first(&self) -> Option<GridPoint> {
        self.points.first().copied()
    }

    pub fn last(&self) -> Option<GridPoint> {
        self.points.last().copied()
    }

    /// The same path read from the other end.
    pub fn reversed(&self) -> EdgePath {
        EdgePath { points: self.points.iter().rev().copied().collect() }
    }
}

/// A directed simple graph on vertices `0..n`. Each unordered pair carries at
/// most one arc.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiGraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl DiGraph {
    /// Builds a graph, keeping arcs in the given order.
    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(n: usize, arcs: I) -> Result<Self, DrawError> {
        let arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(DrawError::VertexOutOfRange { vertex, count: n });
                }
            }
            if u == v {
                return Err(DrawError::SelfLoop(u));
            }
            if adjacency[u].contains(&v) {
                return Err(DrawError::DuplicateArc(u, v));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(DiGraph { n, arcs, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    /// Neighbours ignoring direction, ascending.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Total degree ignoring direction.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.0 == v).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|a| a.1 == v).count()
    }
}

/// A placement of vertices together with one path per arc, keyed `(u, v)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Drawing {
    pub placement: Vec<GridPoint>,
    pub paths: BTreeMap<(usize, usize), EdgePath>,
}

impl Drawing {
    /// A drawing with the given placement and no paths yet.
    pub fn new(placement: Vec<GridPoint>) -> Self {
        Drawing { placement, paths: BTreeMap::new() }
    }

    pub fn insert_path(&mut self, u: usize, v: usize, path: EdgePath) {
        self.paths.insert((u, v), path);
    }

    pub fn path(&self, u: usize, v: usize) -> Option<&EdgePath> {
        self.paths.get(&(u, v))
    }

    /// Longest path length, 0 without paths.
    pub fn max_path_len(&self) -> usize {
        self.paths.values().map(EdgePath::len).max().unwrap_or(0)
    }

    /// Re-keys the paths to follow the arcs of `g`: a path stored as `(v, u)`
    /// for the arc `(u, v)` is reversed. Paths for pairs outside `g` are
    /// dropped.
    pub fn oriented(&self, g: &DiGraph) -> Result<Drawing, DrawError> {
        let mut paths = BTreeMap::new();
        for &(u, v) in g.arcs() {
            let path = match (self.paths.get(&(u, v)), self.paths.get(&(v, u))) {
                (Some(p), _) => p.clone(),
                (None, Some(p)) => p.reversed(),
                (None, None) => return Err(DrawError::MissingPath(u, v)),
            };
            paths.insert((u, v), path);
        }
        Ok(Drawing { placement: self.placement.clone(), paths })
    }

    /// Bounding box `(min, max)` of placements and path points.
    pub fn bounds(&self) -> Option<(GridPoint, GridPoint)> {
        let mut points = self.placement.iter().chain(self.paths.values().flat_map(|p| p.points.iter()));
        let first = *points.next()?;
        Some(points.fold((first, first), |(lo, hi), p| {
            (GridPoint::new(lo.x.min(p.x), lo.y.min(p.y)), GridPoint::new(hi.x.max(p.x), hi.y.max(p.y)))
        }))
    }
}
