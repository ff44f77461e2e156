use thiserror::Error;

use crate::fixed::ParseFixedError;

/// Errors raised while building or reading embedded graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    /// An edge joined a vertex to itself.
    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },
    /// The same unordered edge was listed twice.
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    /// A vertex id was not below the vertex count.
    #[error("vertex {vertex} out of range for {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    /// Two vertices were placed on the same point.
    #[error("vertices {first} and {second} share the same point")]
    DuplicatePoint { first: usize, second: usize },
    /// The embedding does not cover exactly the vertex set.
    #[error("graph has {vertices} vertices but the embedding has {points} points")]
    LengthMismatch { vertices: usize, points: usize },
    /// A subgraph argument contains an edge missing from its host graph.
    #[error("edge {{{u}, {v}}} is not an edge of the host graph")]
    NotSubgraph { u: usize, v: usize },
    /// A cost exponent below one was requested.
    #[error("cost exponent must be at least 1, got {0}")]
    InvalidExponent(String),
    /// A line of the text format could not be understood.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// A decimal literal could not be represented exactly.
    #[error(transparent)]
    Decimal(#[from] ParseFixedError),
}
