//! Resolving sets and metric dimension.
//!
//! A vertex `s` resolves a pair `(u, v)` when `d(u, s) ≠ d(v, s)`. A set is
//! resolving when every pair is resolved by one of its members; the metric
//! dimension is the minimum size of a resolving set.
//!
//! All checks work on a [`DistanceMatrix`] and only read the rows of the
//! landmarks involved, so partial matrices built with
//! [`geom_graph::distance_rows`] suffice for large graphs.
//!
//! ```
//! use geom_graph::{distance_matrix, Graph};
//! use mdim::{is_resolving, metric_dimension_exact, ExactOutcome, LandmarkSet, Verdict};
//!
//! let path = Graph::from_edges(3, [(0, 1), (1, 2)])?;
//! let dm = distance_matrix(&path);
//! assert_eq!(is_resolving(&dm, &LandmarkSet::new([0])?)?, Verdict::Resolving);
//! let ExactOutcome::Optimal { k, set } = metric_dimension_exact(&path, None)? else { unreachable!() };
//! assert_eq!((k, set.vertices()), (1, &[0][..]));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

mod exact;
mod io;
mod landmarks;
mod resolve;
mod restricted;

pub use exact::{exhaustive_metric_dimension, metric_dimension_exact, twin_classes, ExactOutcome};
pub use io::{parse_landmarks, write_landmarks};
pub use landmarks::LandmarkSet;
pub use resolve::{
    greedy_resolving, is_resolving, resolution_witness, resolves, unsolved_pairs, Resolution, ResolutionWitness,
    Verdict,
};
pub use restricted::{restricted_min_resolving, Selection};

use thiserror::Error;

/// Errors raised by the resolving-set routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MdimError {
    /// A vertex id is not below the vertex count.
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    /// A landmark set listed the same vertex twice.
    #[error("vertex {0} listed twice in a landmark set")]
    DuplicateLandmark(usize),
    /// The distance matrix lacks the row of a vertex that must be consulted.
    #[error("distance matrix has no row for vertex {0}")]
    MissingRow(usize),
    /// The exact solver requires a connected graph.
    #[error("graph is disconnected; vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
    /// Two candidate groups share a vertex.
    #[error("candidate groups {first} and {second} share vertex {vertex}")]
    OverlappingGroups { first: usize, second: usize, vertex: usize },
    /// A landmark file line could not be understood.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
