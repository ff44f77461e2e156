//! Text export of an assembly.

use std::fmt::Write as _;

use geom_graph::write_embedded_graph;

use crate::Assembly;

/// The embedded graph followed by `name <id> <label>` lines and one
/// `copy <kind> <copy-id> <vertex ids…>` line per gadget copy.
pub fn write_assembly(a: &Assembly) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} vertices, {} edges, budget {}", a.vertex_count(), a.graph.edge_count(), a.budget);
    out.push_str(&write_embedded_graph(&a.embedded()));
    for (v, name) in a.names.iter().enumerate() {
        let _ = writeln!(out, "name {v} {name}");
    }
    for (k, copy) in a.copies.iter().enumerate() {
        let ids: Vec<String> = copy.vertices.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "copy {} {k} {}", copy.kind, ids.join(" "));
    }
    out
}
