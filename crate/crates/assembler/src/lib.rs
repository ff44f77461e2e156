//! Tile selection, orientation-conflict resolution and assembly of the
//! Gabriel unit disk graph built from a shortened instance and its drawing.

mod assembly;
mod io;
mod landmarks;
mod placement;

pub use assembly::{assemble, build, Assembly, GadgetCopy, Identification, Owner, CELL_PITCH};
pub use io::write_assembly;
pub use landmarks::{
    assignment_to_landmarks, forced_landmarks, forced_landmarks_mixed, fourth_landmark_groups, landmarks_to_assignment,
    ForcedLandmarks,
    PendantChoice, FOURTH_LANDMARK_GROUP,
};
pub use placement::{
    conflicts, resolve_orientation_conflicts, select_tiles, Conflict, EdgeRoute, PlacedTile, Placement, ResolutionStats,
};

use gadgets::GadgetError;

/// Errors from placement and assembly.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AssemblyError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    #[error("edge path from variable {variable} to clause {clause} has length {len}; at most 2 is supported")]
    PathTooLong { variable: usize, clause: usize, len: usize },
    #[error("grid cell ({0}, {1}) claimed twice")]
    CellCollision(i64, i64),
    #[error("no catalog tile for {0}")]
    NoTile(String),
    #[error("orientation conflict left unresolved: {0}")]
    ResidualConflict(String),
    #[error("identification failed: {0}")]
    Identification(String),
    #[error("landmark set has the wrong shape: {0}")]
    LandmarkShape(String),
    #[error(transparent)]
    Gadget(#[from] GadgetError),
    #[error(transparent)]
    Sat(#[from] sat3::SatError),
}
