//! Error type shared across the library.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Operands live in different polynomial rings.
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    /// A square matrix had determinant zero where an inverse was required.
    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// An ideal was zero or the unit ideal where a proper nonzero one is required.
    #[error("degenerate ideal: {0}")]
    DegenerateIdeal(String),

    /// Wrong number of generators, components or matrix dimensions.
    #[error("arity error: {0}")]
    Arity(String),

    /// An input fails a mathematical pre-condition (membership, closure, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The chart does not satisfy the hypothesis the construction needs.
    #[error("unsupported chart: {0}")]
    UnsupportedChart(String),

    /// A bracket table failed the Jacobi identity.
    #[error("invalid Poisson structure: {0}")]
    InvalidPoisson(String),

    /// A set of substitutions is not a group of invertible linear maps.
    #[error("invalid group action: {0}")]
    InvalidAction(String),

    /// Saito's criterion failed where freeness is required.
    #[error("not free: {0}")]
    NotFree(String),

    /// Supplied sections do not form (or project to) a module basis.
    #[error("basis error: {0}")]
    Basis(String),

    /// A truncation degree was missing, inconsistent or over the configured cap.
    #[error("degree error: {0}")]
    Degree(String),

    /// A metric (or a Gram block of one) is singular where it must be invertible.
    #[error("singular metric: {0}")]
    SingularMetric(String),

    /// Text input could not be parsed; `offset` is a 0-based byte offset.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
