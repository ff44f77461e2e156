//! Text dumps of tiles: the embedded-graph format plus `name` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use geom_graph::write_embedded_graph;

use crate::tile::Tile;
use crate::GadgetError;

/// Writes the tile's embedded graph followed by `name <id> <label>` lines.
pub fn write_tile_dump(tile: &Tile) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} {} {}", tile.kind, tile.region, tile.variant);
    out.push_str(&write_embedded_graph(&tile.embedding()));
    for (v, name) in tile.gadget().names().iter().enumerate() {
        let _ = writeln!(out, "name {v} {name}");
    }
    out
}

/// Reads the `name` lines of a dump.
pub fn parse_names(text: &str) -> Result<BTreeMap<usize, String>, GadgetError> {
    let mut names = BTreeMap::new();
    for (index, raw) in text.lines().enumerate() {
        let mut tokens = raw.split_whitespace();
        if tokens.next() != Some("name") {
            continue;
        }
        let line = index + 1;
        let (Some(id), Some(label), None) = (tokens.next(), tokens.next(), tokens.next()) else {
            return Err(GadgetError::Parse { line, message: "expected `name <id> <label>`".into() });
        };
        let id: usize = id.parse().map_err(|_| GadgetError::Parse { line, message: format!("invalid id {id:?}") })?;
        if names.insert(id, label.to_string()).is_some() {
            return Err(GadgetError::Parse { line, message: format!("id {id} named twice") });
        }
    }
    Ok(names)
}
