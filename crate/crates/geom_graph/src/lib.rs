//! Embedded-graph core: exact points, unit disk and Gabriel edge derivation,
//! hop distances and power-cost stretch.
//!
//! Coordinates are decimals with four fractional digits stored as scaled
//! integers, so the predicates `|uv| ≤ 1` and
//! `|uw|² + |wv|² ≤ |uv|²` are decided by integer arithmetic.
//!
//! ```
//! use geom_graph::{gabriel_edges, udg_from_points, Point2};
//!
//! let pts = [Point2::parse("0", "0")?, Point2::parse("0.5", "0")?, Point2::parse("1", "0")?];
//! let g = udg_from_points(&pts)?;
//! assert_eq!(g.graph().edge_count(), 3);
//! assert_eq!(gabriel_edges(&g), vec![(0, 1), (1, 2)]);
//! # Ok::<(), geom_graph::GeomError>(())
//! ```

mod distance;
mod embedded;
mod error;
mod fixed;
mod graph;
mod io;
mod spanner;

pub use distance::{bfs_distances, distance_matrix, distance_rows, Dist, DistanceMatrix};
pub use embedded::{
    gabriel_edges, gabriel_witness, is_gudg_embedding, pairs_within, udg_from_points, EmbeddedGraph, GudgReport,
    GudgViolation,
};
pub use error::GeomError;
pub use fixed::{format_dist2, Fixed, ParseFixedError, Point2, FRACTION_DIGITS, SCALE, UNIT_SQ};
pub use graph::Graph;
pub use io::{parse_embedded_graph, write_embedded_graph};
pub use spanner::energy_stretch;

/// Margin by which non-adjacent vertices must exceed unit distance in
/// validated embeddings: 0.001.
pub const DEFAULT_MARGIN: Fixed = Fixed::from_scaled(10);
