//! Random plane graphs generated directly on the grid, together with a valid
//! drawing.

use std::collections::{BTreeSet, HashSet, VecDeque};

use rand::seq::SliceRandom;
use rand::Rng;

use crate::{Drawing, EdgePath, GridPoint};

/// Shape of a random plane grid graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlaneGridParams {
    /// Lattice columns.
    pub width: usize,
    /// Lattice rows.
    pub height: usize,
    /// Grid distance between neighbouring lattice cells.
    pub spacing: i64,
    /// Each vertex is moved by up to this much in each coordinate.
    pub jitter: i64,
    /// Vertices with fewer incident edges are pruned.
    pub min_degree: usize,
    /// No vertex receives more incident edges.
    pub max_degree: usize,
}

impl Default for PlaneGridParams {
    fn default() -> Self {
        PlaneGridParams { width: 4, height: 3, spacing: 3, jitter: 1, min_degree: 2, max_degree: 3 }
    }
}

/// A connected plane graph drawn on the grid. Vertex `v` sits in lattice
/// cell `cells[v]`; every edge joins horizontally or vertically adjacent
/// cells, so the graph is bipartite by the parity of `col + row`. Edges are
/// stored `(u, v)` with `u < v` and the drawing keys each path the same way.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneGrid {
    pub cells: Vec<(usize, usize)>,
    pub edges: Vec<(usize, usize)>,
    pub drawing: Drawing,
}

impl PlaneGrid {
    /// Parity class of a vertex: `(col + row) mod 2`.
    pub fn parity(&self, v: usize) -> usize {
        let (c, r) = self.cells[v];
        (c + r) % 2
    }
}

/// Generates a plane grid graph: jittered lattice points joined by L-shaped
/// paths between adjacent cells where the grid is free, then pruned to the
/// degree window and reduced to its largest component. The result may be
/// empty for small or unlucky parameters.
pub fn random_plane_grid<R: Rng + ?Sized>(rng: &mut R, params: PlaneGridParams) -> PlaneGrid {
    let PlaneGridParams { width, height, spacing, jitter, min_degree, max_degree } = params;
    // Neighbouring vertices must stay on distinct grid points.
    let jitter = jitter.clamp(0, ((spacing - 1) / 2).max(0));
    let cell_index = |c: usize, r: usize| r * width + c;
    let mut cells = Vec::with_capacity(width * height);
    let mut placement = Vec::with_capacity(width * height);
    for r in 0..height {
        for c in 0..width {
            cells.push((c, r));
            let dx = rng.gen_range(-jitter..=jitter);
            let dy = rng.gen_range(-jitter..=jitter);
            placement.push(GridPoint::new(c as i64 * spacing + dx, r as i64 * spacing + dy));
        }
    }
    let vertex_points: HashSet<GridPoint> = placement.iter().copied().collect();
    let mut candidates = Vec::new();
    for r in 0..height {
        for c in 0..width {
            if c + 1 < width {
                candidates.push((cell_index(c, r), cell_index(c + 1, r)));
            }
            if r + 1 < height {
                candidates.push((cell_index(c, r), cell_index(c, r + 1)));
            }
        }
    }
    candidates.shuffle(rng);
    let mut degree = vec![0usize; cells.len()];
    let mut used: HashSet<GridPoint> = HashSet::new();
    let mut edges: Vec<((usize, usize), EdgePath)> = Vec::new();
    for (u, v) in candidates {
        if degree[u] >= max_degree || degree[v] >= max_degree {
            continue;
        }
        let mut routes = [l_route(placement[u], placement[v], true), l_route(placement[u], placement[v], false)];
        if rng.gen_bool(0.5) {
            routes.swap(0, 1);
        }
        let free = |path: &EdgePath| {
            path.points[1..path.points.len() - 1].iter().all(|p| !used.contains(p) && !vertex_points.contains(p))
        };
        if let Some(path) = routes.into_iter().find(free) {
            used.extend(path.points[1..path.points.len() - 1].iter().copied());
            degree[u] += 1;
            degree[v] += 1;
            edges.push(((u, v), path));
        }
    }
    let mut alive: BTreeSet<usize> = (0..cells.len()).collect();
    loop {
        let weak: Vec<usize> = alive.iter().copied().filter(|&v| degree[v] < min_degree).collect();
        if weak.is_empty() {
            break;
        }
        for v in weak {
            alive.remove(&v);
        }
        edges.retain(|((u, v), _)| {
            let keep = alive.contains(u) && alive.contains(v);
            if !keep {
                degree[*u] -= 1;
                degree[*v] -= 1;
            }
            keep
        });
    }
    let component = largest_component(&alive, &edges);
    let mut new_id = vec![usize::MAX; cells.len()];
    let mut out = PlaneGrid { cells: Vec::new(), edges: Vec::new(), drawing: Drawing::default() };
    for &v in &component {
        new_id[v] = out.cells.len();
        out.cells.push(cells[v]);
        out.drawing.placement.push(placement[v]);
    }
    for ((u, v), path) in edges {
        if new_id[u] != usize::MAX && new_id[v] != usize::MAX {
            let (a, b) = (new_id[u], new_id[v]);
            out.edges.push((a, b));
            out.drawing.insert_path(a, b, path);
        }
    }
    out.edges.sort_unstable();
    out
}

/// Path from `a` to `b` with one bend; horizontal leg first if requested.
fn l_route(a: GridPoint, b: GridPoint, horizontal_first: bool) -> EdgePath {
    let corner = if horizontal_first { GridPoint::new(b.x, a.y) } else { GridPoint::new(a.x, b.y) };
    let mut points = vec![a];
    for target in [corner, b] {
        let mut p = *points.last().expect("nonempty");
        while p != target {
            p = GridPoint::new(p.x + (target.x - p.x).signum(), p.y + (target.y - p.y).signum());
            points.push(p);
        }
    }
    EdgePath::new(points)
}

fn largest_component(alive: &BTreeSet<usize>, edges: &[((usize, usize), EdgePath)]) -> Vec<usize> {
    let mut best: Vec<usize> = Vec::new();
    let mut seen: HashSet<usize> = HashSet::new();
    for &start in alive {
        if !seen.insert(start) {
            continue;
        }
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &((u, v), _) in edges {
                let other = if u == x { v } else if v == x { u } else { continue };
                if seen.insert(other) {
                    comp.push(other);
                    queue.push_back(other);
                }
            }
        }
        if comp.len() > best.len() {
            best = comp;
        }
    }
    best.sort_unstable();
    best
}
