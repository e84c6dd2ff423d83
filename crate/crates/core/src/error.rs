use thiserror::Error;

/// Errors raised by constructors and operations. Axiom failures are not
/// errors; they are reported through [`crate::report::Report`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not invertible")]
    NotInvertible,

    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),

    #[error("map does not commute with the structure automorphisms: {0}")]
    NotHomMorphism(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("degree overflow: product of degrees {left} and {right} exceeds bound {bound}")]
    DegreeOverflow {
        left: usize,
        right: usize,
        bound: usize,
    },

    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn mismatch(msg: impl Into<String>) -> Error {
    Error::DimensionMismatch(msg.into())
}
