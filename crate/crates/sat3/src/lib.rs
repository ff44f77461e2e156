//! 1-negative planar 3-SAT instances.
//!
//! Every variable occurs in two or three clauses, exactly once negated.
//! Every clause has two or three literals, and a three-literal clause holds
//! at least one negated literal. Planarity of the clause-variable graph is
//! certified separately by an [`orthodraw::Drawing`].
//!
//! ```
//! use sat3::{brute_force_sat, parse_dimacs, validate_instance, NameRules};
//!
//! let psi = parse_dimacs("p cnf 3 2\n1 2 -3 0\n-1 -2 3 0\n", NameRules::Input)?;
//! assert!(validate_instance(&psi).passed());
//! let a = brute_force_sat(&psi)?.expect("satisfiable");
//! assert!(psi.is_satisfied_by(&a));
//! # Ok::<(), sat3::SatError>(())
//! ```

mod dimacs;
mod graph;
mod instance;
mod random;
mod shorten;
mod solve;

pub use dimacs::{parse_dimacs, write_dimacs, NameRules};
pub use graph::{clause_variable_graph, ClauseVariableGraph};
pub use instance::{validate_instance, Clause, InstanceReport, InstanceViolation, Literal, SatInstance, TruthAssignment};
pub use random::{random_instance, RandomInstanceParams};
pub use shorten::shorten_edge_paths;
pub use solve::{brute_force_sat, MAX_BRUTE_FORCE_VARIABLES};

use thiserror::Error;

/// Names containing this character are reserved for generated variables and
/// clauses.
pub const RESERVED_MARK: char = '#';

/// Errors raised by instance handling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SatError {
    /// Brute force was asked to enumerate too many variables.
    #[error("{count} variables exceed the brute-force limit of {limit}")]
    TooManyVariables { count: usize, limit: usize },
    /// An input name uses the reserved generated-name namespace.
    #[error("name {0:?} uses the reserved '#' namespace")]
    ReservedName(String),
    /// The instance violates the fragment's combinatorial rules.
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    /// The drawing does not draw the clause-variable graph.
    #[error("invalid drawing: {0}")]
    InvalidDrawing(String),
    /// The random generator ran out of attempts.
    #[error("no valid instance generated after {0} attempts")]
    GenerationFailed(usize),
    /// A DIMACS line could not be understood.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    /// An error from the drawing layer.
    #[error(transparent)]
    Draw(#[from] orthodraw::DrawError),
}
