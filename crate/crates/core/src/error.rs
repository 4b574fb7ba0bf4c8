use exactpoly::PolyError;
use thiserror::Error;

/// Errors raised by the verification pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("invalid partition `{0}`")]
    InvalidPartition(String),
    #[error("partition {partition} has more than {max} nonzero parts")]
    PartitionTooLong { partition: String, max: usize },
    #[error("partition {partition} does not fit in a {rows}x{cols} rectangle")]
    PartitionOutsideRectangle { partition: String, rows: usize, cols: usize },
    #[error("polynomial is not symmetric in the variables {family:?}")]
    NotSymmetric { family: Vec<String> },
    #[error("{case}: constraint violated: {invariant}")]
    Constraint { case: String, invariant: String },
    #[error("{case} (n = {n}): dual determinant is not a perfect square; witness {witness}")]
    NotAPerfectSquare { case: String, n: usize, witness: String },
    #[error("{case}: elimination system is singular ({detail})")]
    SingularElimination { case: String, detail: String },
    #[error("a rational point is required but the input has symbolic entries")]
    SymbolicInput,
    #[error("{0}")]
    Unsupported(String),
    /// An internal identity that must hold by construction failed.
    #[error("internal consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
