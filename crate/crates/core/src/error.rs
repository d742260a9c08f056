use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vectors are linearly dependent")]
    Dependent,

    #[error("relative volume of the empty set is not defined")]
    EmptySet,

    #[error("dilation factor must be a positive integer")]
    ZeroDilation,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("vector {0} is not a classical positive root")]
    NotARoot(String),

    #[error("graph is not a signed pseudoforest")]
    NotPseudoforest,

    #[error("series precondition violated: {0}")]
    Series(&'static str),

    #[error("size guard: {0}")]
    SizeGuard(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
