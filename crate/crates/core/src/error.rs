use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument outside the domain of the operation (zero dimension, empty set, ...).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    /// A point set or family contains the same point twice.
    #[error("duplicate point at positions {first} and {second}")]
    DuplicatePoint { first: usize, second: usize },

    /// A documented precondition does not hold; the message names the witness.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A table-mode power function was queried outside its declared domain.
    #[error("power function undefined: {0}")]
    Undefined(String),

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("parse error: {0}")]
    Parse(String),

    /// An invariant the construction guarantees was observed to fail.
    #[error("internal error: {0}")]
    Internal(String),
}
