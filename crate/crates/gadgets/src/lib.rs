//! Gadget graphs, their tile embeddings, transforms, connection vectors and
//! the tile-type catalog.
//!
//! ```
//! use gadgets::{gadget, GadgetKind};
//!
//! let ge = gadget(GadgetKind::Ge);
//! assert_eq!(ge.vertex_count(), 74);
//! assert_eq!(ge.graph.edge_count(), 72);
//! ```

mod catalog;
mod connection;
mod gadget;
mod interior;
mod io;
mod region;
mod tile;
mod transform;

pub use catalog::{
    base_tile, catalog, clause_variant_lookup, edge_tile, edge_tiles, find_vertex_tile, variable_flip_lookup,
    CatalogEntry, Table1Row, TileSource, SOURCES, TABLE1,
};
pub use connection::{ConnectionVector, Entry, Link, Orientation, TileType};
pub use gadget::{
    gadget, make_gadget, variable_interior, vertex_labels, Gadget, GadgetKind, Polarity, TfPair, CLAUSE_PATH_LEN,
    EDGE_PATH_LEN, VARIABLE_PATH_LEN,
};
pub use interior::{InteriorRow, INTERIOR_NUDGES, N2_POSITION, VARIABLE_INTERIOR};
pub use io::{parse_names, write_tile_dump};
pub use region::{Region, Side, HALF_SIDE, TILE_SIDE};
pub use tile::{Tile, TileViolation};
pub use transform::{Relabel, Transform};

/// Errors from tile construction and catalog lookups.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GadgetError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{kind} has no vertex labelled {label}")]
    UnknownLabel { kind: GadgetKind, label: String },
    #[error("vertex {label} positioned twice")]
    DuplicateLabel { label: String },
    #[error("vertex {label} has no position")]
    MissingLabel { label: String },
    #[error("expected {expected} points, found {found}")]
    PointCount { expected: usize, found: usize },
    #[error("no built-in tile named {0}")]
    UnknownTile(String),
    #[error("tile {0} is not a variable tile")]
    NotVariable(String),
    #[error("tile {0} is not a clause tile")]
    NotClause(String),
    #[error("no catalog mate for tile {0}")]
    NoMate(String),
}
