use thiserror::Error;

use crate::partitions::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An exactness invariant did not hold. Seeing this is a bug.
    #[error("internal arithmetic fault: {0}")]
    ArithmeticFault(String),

    #[error("resource limit exceeded: {0}")]
    ResourceExhausted(String),

    #[error("degree sequence {sequence} has no non-separable realization: {violation}")]
    Inadmissible {
        sequence: String,
        violation: Violation,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
