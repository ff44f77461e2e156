//! SVG rendering of embedded graphs.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use geom_graph::{gabriel_witness, pairs_within, EmbeddedGraph, SCALE, UNIT_SQ};

const PIXELS_PER_UNIT: f64 = 40.0;
const PAD: f64 = 1.0;

/// Draws every unit disk pair of the embedding: Gabriel pairs solid, the
/// others dashed. Pairs that are not edges of the graph are drawn red.
pub fn render(g: &EmbeddedGraph, labels: Option<&[String]>) -> String {
    let pts = g.points();
    let xs: Vec<f64> = pts.iter().map(|p| p.x.to_f64()).collect();
    let ys: Vec<f64> = pts.iter().map(|p| p.y.to_f64()).collect();
    let fold = |v: &[f64], f: fn(f64, f64) -> f64, init: f64| v.iter().copied().fold(init, f);
    let (min_x, max_x) = (fold(&xs, f64::min, 0.0), fold(&xs, f64::max, 0.0));
    let (min_y, max_y) = (fold(&ys, f64::min, 0.0), fold(&ys, f64::max, 0.0));
    let width = (max_x - min_x + 2.0 * PAD) * PIXELS_PER_UNIT;
    let height = (max_y - min_y + 2.0 * PAD) * PIXELS_PER_UNIT;
    let sx = |x: f64| (x - min_x + PAD) * PIXELS_PER_UNIT;
    let sy = |y: f64| (max_y - y + PAD) * PIXELS_PER_UNIT;

    let edges: BTreeSet<(usize, usize)> = g.graph().edges().iter().copied().collect();
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.1}" height="{height:.1}" viewBox="0 0 {width:.1} {height:.1}">"#
    );
    let _ = writeln!(out, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (u, v, d2) in pairs_within(pts, SCALE) {
        if d2 > UNIT_SQ {
            continue;
        }
        let dash = if gabriel_witness(pts, u, v).is_some() { r#" stroke-dasharray="4 3""# } else { "" };
        let colour = if edges.contains(&(u, v)) { "black" } else { "red" };
        let _ = writeln!(
            out,
            r#"<line x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{colour}" stroke-width="1.5"{dash}/>"#,
            sx(xs[u]),
            sy(ys[u]),
            sx(xs[v]),
            sy(ys[v])
        );
    }
    for v in 0..pts.len() {
        let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="3" fill="steelblue"/>"#, sx(xs[v]), sy(ys[v]));
        if let Some(name) = labels.and_then(|l| l.get(v)) {
            let _ = writeln!(
                out,
                r#"<text x="{:.2}" y="{:.2}" font-size="7" font-family="monospace">{name}</text>"#,
                sx(xs[v]) + 4.0,
                sy(ys[v]) - 4.0
            );
        }
    }
    out.push_str("</svg>\n");
    out
}
