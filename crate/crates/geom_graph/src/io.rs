//! Line-oriented text format for embedded graphs.
//!
//! ```text
//! v <id> <x> <y>
//! e <u> <v>
//! ```
//!
//! Ids are 0-based and every id in `0..n` must be declared exactly once.
//! Blank lines and lines starting with `#` are skipped. `name` and `copy`
//! lines carry annotations written by gadget and assembly dumps; they are
//! skipped here and read by the tools that understand them.

use std::fmt::Write as _;

use crate::embedded::EmbeddedGraph;
use crate::error::GeomError;
use crate::fixed::Point2;
use crate::graph::Graph;

fn parse_id(token: Option<&str>, line: usize, what: &str) -> Result<usize, GeomError> {
    let token = token.ok_or_else(|| GeomError::Parse { line, message: format!("missing {what}") })?;
    token.parse().map_err(|_| GeomError::Parse { line, message: format!("invalid {what} {token:?}") })
}

fn parse_coord(token: Option<&str>, line: usize, what: &str) -> Result<crate::fixed::Fixed, GeomError> {
    let token = token.ok_or_else(|| GeomError::Parse { line, message: format!("missing {what}") })?;
    token.parse().map_err(|e| GeomError::Parse { line, message: format!("{what}: {e}") })
}

/// Reads an embedded graph. Errors carry the 1-based line number.
pub fn parse_embedded_graph(text: &str) -> Result<EmbeddedGraph, GeomError> {
    let mut vertices: Vec<(usize, Point2, usize)> = Vec::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("v") => {
                let id = parse_id(tokens.next(), line, "vertex id")?;
                let x = parse_coord(tokens.next(), line, "x coordinate")?;
                let y = parse_coord(tokens.next(), line, "y coordinate")?;
                if tokens.next().is_some() {
                    return Err(GeomError::Parse { line, message: "trailing tokens".into() });
                }
                vertices.push((id, Point2::new(x, y), line));
            }
            Some("e") => {
                let u = parse_id(tokens.next(), line, "edge endpoint")?;
                let v = parse_id(tokens.next(), line, "edge endpoint")?;
                if tokens.next().is_some() {
                    return Err(GeomError::Parse { line, message: "trailing tokens".into() });
                }
                edges.push((u, v, line));
            }
            Some("name") | Some("copy") => {}
            Some(other) => {
                return Err(GeomError::Parse { line, message: format!("unknown record {other:?}") });
            }
            None => {}
        }
    }
    let n = vertices.len();
    let mut points: Vec<Option<Point2>> = vec![None; n];
    for &(id, p, line) in &vertices {
        if id >= n {
            return Err(GeomError::Parse { line, message: format!("vertex id {id} out of range for {n} vertices") });
        }
        if points[id].replace(p).is_some() {
            return Err(GeomError::Parse { line, message: format!("vertex {id} declared twice") });
        }
    }
    for &(u, v, line) in &edges {
        if u >= n || v >= n {
            return Err(GeomError::Parse { line, message: format!("edge {{{u}, {v}}} names an undeclared vertex") });
        }
    }
    let graph = Graph::from_edges(n, edges.iter().map(|&(u, v, _)| (u, v)))?;
    let points = points.into_iter().map(|p| p.expect("every id in range was declared once")).collect();
    EmbeddedGraph::new(graph, points)
}

/// Writes an embedded graph; the output parses back to an equal value.
pub fn write_embedded_graph(g: &EmbeddedGraph) -> String {
    let mut out = String::new();
    for (v, p) in g.points().iter().enumerate() {
        let _ = writeln!(out, "v {v} {} {}", p.x, p.y);
    }
    for &(u, v) in g.graph().edges() {
        let _ = writeln!(out, "e {u} {v}");
    }
    out
}
