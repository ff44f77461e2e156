//! A validity-only heuristic drawer.
//!
//! Vertices are stacked in rows by breadth-first layer and ordered inside a
//! row by the mean column of their already placed neighbours. Arcs are then
//! routed one by one with a breadth-first maze search. The four grid
//! neighbours of every vertex are its ports; a route may only use a port of
//! its own endpoints, so no vertex is ever walled in by foreign paths. When an
//! arc cannot be routed it moves to the front of the order and routing starts
//! over (rip-up and reroute).

use std::collections::{HashMap, HashSet, VecDeque};

use crate::{validate_drawing, DiGraph, DrawError, Drawing, EdgePath, GridPoint};

const SPACINGS: [i64; 3] = [4, 6, 8];

/// Draws a graph of maximum degree 4. Tries several row spacings and root
/// choices; fails with [`DrawError::NoDrawingFound`] rather than return an
/// invalid drawing.
pub fn simple_orthogonal_draw(g: &DiGraph) -> Result<Drawing, DrawError> {
    let n = g.vertex_count();
    for v in 0..n {
        if g.degree(v) > 4 {
            return Err(DrawError::DegreeTooLarge { vertex: v, degree: g.degree(v) });
        }
    }
    let mut roots: Vec<usize> = (0..n).collect();
    roots.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    roots.truncate(16);
    if roots.is_empty() {
        return Ok(Drawing::new(Vec::new()));
    }
    for &spacing in &SPACINGS {
        for &root in &roots {
            let placement = layered_placement(g, root, spacing);
            if let Some(drawing) = route_with_retries(g, &placement, spacing) {
                if validate_drawing(g, &drawing).passed() {
                    return Ok(drawing);
                }
            }
        }
    }
    Err(DrawError::NoDrawingFound(format!("maze routing failed for all {} layouts", SPACINGS.len() * roots.len())))
}

/// Rows by breadth-first layer from `root`, then from the smallest unvisited
/// vertex for further components. Inside a row vertices are sorted by the
/// mean column of their neighbours in earlier rows.
fn layered_placement(g: &DiGraph, root: usize, spacing: i64) -> Vec<GridPoint> {
    let n = g.vertex_count();
    let mut layer = vec![usize::MAX; n];
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let starts = std::iter::once(root).chain(0..n);
    for start in starts {
        if layer[start] != usize::MAX {
            continue;
        }
        layer[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            if rows.len() <= layer[u] {
                rows.resize(layer[u] + 1, Vec::new());
            }
            rows[layer[u]].push(u);
            for &w in g.neighbors(u) {
                if layer[w] == usize::MAX {
                    layer[w] = layer[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut column = vec![0f64; n];
    let mut placement = vec![GridPoint::default(); n];
    for (depth, row) in rows.iter_mut().enumerate() {
        let key = |v: usize| -> f64 {
            let above: Vec<f64> = g.neighbors(v).iter().filter(|&&w| layer[w] < depth).map(|&w| column[w]).collect();
            if above.is_empty() {
                f64::MAX
            } else {
                above.iter().sum::<f64>() / above.len() as f64
            }
        };
        let mut keyed: Vec<(f64, usize)> = row.iter().map(|&v| (key(v), v)).collect();
        keyed.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        let width = keyed.len() as f64;
        for (i, &(_, v)) in keyed.iter().enumerate() {
            column[v] = i as f64 - (width - 1.0) / 2.0;
            let x = (2.0 * column[v]).round() as i64 * (spacing / 2);
            placement[v] = GridPoint::new(x, -(depth as i64) * spacing);
        }
    }
    placement
}

fn route_with_retries(g: &DiGraph, placement: &[GridPoint], spacing: i64) -> Option<Drawing> {
    let arcs = g.arcs();
    let mut order: Vec<usize> = (0..arcs.len()).collect();
    order.sort_by_key(|&i| (placement[arcs[i].0].manhattan(placement[arcs[i].1]), i));
    for _ in 0..=2 * arcs.len() {
        match route_all(g, placement, spacing, &order)? {
            Ok(drawing) => return Some(drawing),
            Err(failed) => {
                let at = order.iter().position(|&i| i == failed).expect("failed arc is in the order");
                if at == 0 {
                    return None;
                }
                order.remove(at);
                order.insert(0, failed);
            }
        }
    }
    None
}

/// Routes arcs in the given order. The outer `None` means the placement
/// itself is unusable; the inner error names the first arc that failed.
fn route_all(g: &DiGraph, placement: &[GridPoint], spacing: i64, order: &[usize]) -> Option<Result<Drawing, usize>> {
    let mut vertex_at: HashMap<GridPoint, usize> = HashMap::new();
    for (v, &p) in placement.iter().enumerate() {
        if vertex_at.insert(p, v).is_some() {
            return None;
        }
    }
    let mut port_of: HashMap<GridPoint, usize> = HashMap::new();
    for (v, &p) in placement.iter().enumerate() {
        for q in p.neighbors() {
            if vertex_at.contains_key(&q) || port_of.insert(q, v).is_some() {
                return None;
            }
        }
    }
    let (mut lo, mut hi) = (placement[0], placement[0]);
    for p in placement {
        lo = GridPoint::new(lo.x.min(p.x), lo.y.min(p.y));
        hi = GridPoint::new(hi.x.max(p.x), hi.y.max(p.y));
    }
    let margin = 2 * spacing;
    let inside = |p: GridPoint| p.x >= lo.x - margin && p.x <= hi.x + margin && p.y >= lo.y - margin && p.y <= hi.y + margin;
    let mut used: HashSet<GridPoint> = HashSet::new();
    let mut drawing = Drawing::new(placement.to_vec());
    for &i in order {
        let (u, v) = g.arcs()[i];
        let (a, b) = (placement[u], placement[v]);
        let free_port = |p: &GridPoint| !used.contains(p);
        let sources: Vec<GridPoint> = a.neighbors().into_iter().filter(free_port).collect();
        let targets: HashSet<GridPoint> = b.neighbors().into_iter().filter(free_port).collect();
        let mut parent: HashMap<GridPoint, GridPoint> = HashMap::new();
        let mut queue: VecDeque<GridPoint> = VecDeque::new();
        for &s in &sources {
            parent.insert(s, a);
            queue.push_back(s);
        }
        let mut reached = None;
        while let Some(p) = queue.pop_front() {
            if targets.contains(&p) {
                reached = Some(p);
                break;
            }
            for q in p.neighbors() {
                if parent.contains_key(&q) || !inside(q) || used.contains(&q) || vertex_at.contains_key(&q) {
                    continue;
                }
                if let Some(&owner) = port_of.get(&q) {
                    if owner != v {
                        continue;
                    }
                    if !targets.contains(&q) {
                        continue;
                    }
                }
                parent.insert(q, p);
                queue.push_back(q);
            }
        }
        let Some(end) = reached else { return Some(Err(i)) };
        let mut points = vec![b, end];
        let mut cur = end;
        while let Some(&prev) = parent.get(&cur) {
            points.push(prev);
            if prev == a {
                break;
            }
            cur = prev;
        }
        points.reverse();
        for &p in &points[1..points.len() - 1] {
            used.insert(p);
        }
        drawing.insert_path(u, v, EdgePath::new(points));
    }
    Some(Ok(drawing))
}
