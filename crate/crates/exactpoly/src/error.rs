use thiserror::Error;

/// Failure modes of the polynomial and matrix kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable contexts {left:?} and {right:?} cannot be aligned (neither is a prefix of the other)")]
    ContextMismatch { left: Vec<String>, right: Vec<String> },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("no value or image supplied for variable `{0}`")]
    MissingAssignment(String),
    #[error("expected a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
