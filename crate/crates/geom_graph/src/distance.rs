//! Hop distances.

use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use crate::error::GeomError;
use crate::graph::Graph;

/// A hop distance, or the distinguished value for unreachable vertices.
///
/// The derived order places every finite distance below [`Dist::Infinite`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dist {
    /// A finite number of hops.
    Finite(u32),
    /// No path exists.
    Infinite,
}

impl Dist {
    /// The hop count if finite.
    pub fn finite(self) -> Option<u32> {
        match self {
            Dist::Finite(d) => Some(d),
            Dist::Infinite => None,
        }
    }

    /// Whether a path exists.
    pub fn is_finite(self) -> bool {
        matches!(self, Dist::Finite(_))
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dist::Finite(d) => write!(f, "{d}"),
            Dist::Infinite => write!(f, "inf"),
        }
    }
}

/// Breadth-first hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Dist>, GeomError> {
    if source >= g.vertex_count() {
        return Err(GeomError::VertexOutOfRange { vertex: source, count: g.vertex_count() });
    }
    Ok(bfs(g, source))
}

fn bfs(g: &Graph, source: usize) -> Vec<Dist> {
    let mut dist = vec![Dist::Infinite; g.vertex_count()];
    dist[source] = Dist::Finite(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let Dist::Finite(du) = dist[u] else { unreachable!("queued vertices are reached") };
        for &w in g.neighbors(u) {
            if dist[w] == Dist::Infinite {
                dist[w] = Dist::Finite(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Hop distances from a set of source vertices.
///
/// A complete matrix holds a row for every vertex. A partial matrix holds
/// rows only for selected sources; since distances are symmetric, `d(u, v)`
/// is available whenever `u` or `v` is a source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    rows: Vec<Option<Vec<Dist>>>,
}

impl DistanceMatrix {
    /// Number of vertices of the underlying graph.
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Distances from `source`, if it is a source of this matrix.
    pub fn row(&self, source: usize) -> Option<&[Dist]> {
        self.rows.get(source).and_then(|r| r.as_deref())
    }

    /// Whether `source` has a row.
    pub fn has_row(&self, source: usize) -> bool {
        self.row(source).is_some()
    }

    /// Whether every vertex has a row.
    pub fn is_complete(&self) -> bool {
        self.rows.iter().all(Option::is_some)
    }

    /// Sources with a stored row, ascending.
    pub fn sources(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().enumerate().filter(|(_, r)| r.is_some()).map(|(s, _)| s)
    }

    /// `d(u, v)` if either endpoint has a row.
    pub fn get(&self, u: usize, v: usize) -> Option<Dist> {
        if let Some(row) = self.row(u) {
            return row.get(v).copied();
        }
        self.row(v).and_then(|row| row.get(u).copied())
    }
}

/// All-sources hop distances. Sources run in parallel; the result does not
/// depend on scheduling.
pub fn distance_matrix(g: &Graph) -> DistanceMatrix {
    let rows = (0..g.vertex_count()).into_par_iter().map(|s| Some(bfs(g, s))).collect();
    DistanceMatrix { n: g.vertex_count(), rows }
}

/// Hop distances from the given sources only.
pub fn distance_rows(g: &Graph, sources: &[usize]) -> Result<DistanceMatrix, GeomError> {
    let n = g.vertex_count();
    if let Some(&vertex) = sources.iter().find(|&&s| s >= n) {
        return Err(GeomError::VertexOutOfRange { vertex, count: n });
    }
    let mut wanted = sources.to_vec();
    wanted.sort_unstable();
    wanted.dedup();
    let computed: Vec<(usize, Vec<Dist>)> = wanted.par_iter().map(|&s| (s, bfs(g, s))).collect();
    let mut rows = vec![None; n];
    for (s, row) in computed {
        rows[s] = Some(row);
    }
    Ok(DistanceMatrix { n, rows })
}
