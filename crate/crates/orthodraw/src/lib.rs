//! Planar orthogonal grid drawings of directed graphs.
//!
//! A drawing places every vertex on a distinct integer grid point and draws
//! every arc `(u, v)` as a path of unit grid steps from the placement of `u`
//! to the placement of `v`. Two paths may only meet at the placement of a
//! shared endpoint.
//!
//! ```
//! use orthodraw::{validate_drawing, DiGraph, Drawing, EdgePath, GridPoint};
//!
//! let g = DiGraph::from_arcs(2, [(0, 1)])?;
//! let mut d = Drawing::new(vec![GridPoint::new(0, 0), GridPoint::new(2, 0)]);
//! d.insert_path(0, 1, EdgePath::new(vec![GridPoint::new(0, 0), GridPoint::new(1, 0), GridPoint::new(2, 0)]));
//! assert!(validate_drawing(&g, &d).passed());
//! # Ok::<(), orthodraw::DrawError>(())
//! ```

mod direction;
mod draw;
mod grid;
mod io;
mod random;
mod validate;

pub use direction::{edge_direction, Direction, End};
pub use draw::simple_orthogonal_draw;
pub use grid::{DiGraph, Drawing, EdgePath, GridPoint};
pub use io::{parse_drawing, write_drawing};
pub use random::{random_plane_grid, PlaneGrid, PlaneGridParams};
pub use validate::{validate_drawing, DrawingViolation, ValidationReport};

use thiserror::Error;

/// Errors raised while building, reading or computing drawings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrawError {
    /// A vertex id is not below the vertex count.
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    /// An arc joins a vertex to itself.
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    /// The same pair of vertices is joined twice, in either direction.
    #[error("arc ({0}, {1}) listed twice")]
    DuplicateArc(usize, usize),
    /// A direction was requested for a path without steps.
    #[error("edge path has no steps")]
    EmptyPath,
    /// The drawer only handles vertices of degree at most four.
    #[error("vertex {vertex} has degree {degree}; at most 4 is drawable")]
    DegreeTooLarge { vertex: usize, degree: usize },
    /// The heuristic drawer gave up.
    #[error("no drawing found ({0}); supply one via file")]
    NoDrawingFound(String),
    /// A path is keyed by an arc the graph does not contain.
    #[error("no path stored for arc ({0}, {1})")]
    MissingPath(usize, usize),
    /// A drawing file line could not be understood.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
