//! Power-cost stretch of a spanning subgraph.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::embedded::EmbeddedGraph;
use crate::error::GeomError;
use crate::fixed::{Fixed, UNIT_SQ};
use crate::graph::Graph;

#[derive(Clone, Copy, PartialEq)]
struct Entry {
    cost: f64,
    vertex: usize,
}

impl Eq for Entry {}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        other.cost.total_cmp(&self.cost).then_with(|| other.vertex.cmp(&self.vertex))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn dijkstra(graph: &Graph, weight: &dyn Fn(usize, usize) -> f64, source: usize) -> Vec<f64> {
    let mut cost = vec![f64::INFINITY; graph.vertex_count()];
    cost[source] = 0.0;
    let mut heap = BinaryHeap::from([Entry { cost: 0.0, vertex: source }]);
    while let Some(Entry { cost: c, vertex: u }) = heap.pop() {
        if c > cost[u] {
            continue;
        }
        for &w in graph.neighbors(u) {
            let next = c + weight(u, w);
            if next < cost[w] {
                cost[w] = next;
                heap.push(Entry { cost: next, vertex: w });
            }
        }
    }
    cost
}

/// Maximum ratio, over vertex pairs connected in `udg`, between the cheapest
/// path cost in `sub` and the cheapest path cost in `udg`, where an edge
/// `{u, v}` costs `|uv|^alpha`.
///
/// Returns `f64::INFINITY` when `sub` disconnects a pair that `udg`
/// connects, and `1.0` when there is no connected pair at all.
pub fn energy_stretch(udg: &EmbeddedGraph, sub: &Graph, alpha: Fixed) -> Result<f64, GeomError> {
    if alpha < Fixed::ONE {
        return Err(GeomError::InvalidExponent(alpha.to_string()));
    }
    let host = udg.graph();
    if sub.vertex_count() != host.vertex_count() {
        return Err(GeomError::LengthMismatch { vertices: host.vertex_count(), points: sub.vertex_count() });
    }
    if let Some(&(u, v)) = sub.edges().iter().find(|&&(u, v)| !host.has_edge(u, v)) {
        return Err(GeomError::NotSubgraph { u, v });
    }
    let half_alpha = alpha.to_f64() / 2.0;
    let points = udg.points();
    let weight = |u: usize, v: usize| {
        let d2 = points[u].dist2(points[v]) as f64 / UNIT_SQ as f64;
        d2.powf(half_alpha)
    };
    let mut worst: f64 = 1.0;
    for s in 0..host.vertex_count() {
        let full = dijkstra(host, &weight, s);
        let restricted = dijkstra(sub, &weight, s);
        for t in (s + 1)..host.vertex_count() {
            if !full[t].is_finite() {
                continue;
            }
            if !restricted[t].is_finite() {
                return Ok(f64::INFINITY);
            }
            worst = worst.max(restricted[t] / full[t]);
        }
    }
    Ok(worst)
}
