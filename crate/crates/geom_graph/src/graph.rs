//! Simple undirected graphs over dense vertex ids.

use crate::error::GeomError;

/// An undirected simple graph on the vertex ids `0..vertex_count`.
///
/// The edge list is stored with `u < v` in sorted order and every adjacency
/// list is sorted, so iteration order is deterministic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// A graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adjacency: vec![Vec::new(); n], edges: Vec::new() }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range ids.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GeomError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut list = Vec::new();
        for (u, v) in edges {
            for vertex in [u, v] {
                if vertex >= n {
                    return Err(GeomError::VertexOutOfRange { vertex, count: n });
                }
            }
            if u == v {
                return Err(GeomError::SelfLoop { vertex: u });
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeomError::DuplicateEdge { u: w[0].0, v: w[0].1 });
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for neighbors in &mut adjacency {
            neighbors.sort_unstable();
        }
        Ok(Graph { adjacency, edges: list })
    }

    /// Number of vertices.
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbors of `v`.
    ///
    /// # Panics
    ///
    /// Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    /// Whether `{u, v}` is an edge. Out-of-range ids yield `false`.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u).is_some_and(|n| n.binary_search(&v).is_ok())
    }

    /// The smallest-id vertex of maximum degree together with that degree.
    pub fn max_degree(&self) -> Option<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .map(|(v, n)| (v, n.len()))
            .fold(None, |best, (v, d)| match best {
                Some((_, bd)) if bd >= d => best,
                _ => Some((v, d)),
            })
    }

    /// Connected-component label per vertex; labels are assigned in order of
    /// the smallest vertex of each component.
    pub fn component_labels(&self) -> Vec<usize> {
        let n = self.vertex_count();
        let mut label = vec![usize::MAX; n];
        let mut next = 0;
        let mut stack = Vec::new();
        for start in 0..n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = next;
            stack.push(start);
            while let Some(u) = stack.pop() {
                for &w in &self.adjacency[u] {
                    if label[w] == usize::MAX {
                        label[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        label
    }

    /// Whether the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        self.component_labels().iter().all(|&c| c == 0)
    }
}
