use alloc::string::String;

/// Errors raised by constructors and checkers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("map is singular")]
    SingularMap,
    #[error("not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("map does not descend to the quotient: {0}")]
    NonDescendingMap(String),
    #[error("product leaves the constrained subspace: {0}")]
    NotClosed(String),
    #[error("coring is not in standard entwining form: {0}")]
    NotStandardForm(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::ShapeMismatch(msg.into())
}
