use thiserror::Error;

use crate::verifier::Witness;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("syntax error at position {position}: expected {expected}")]
    Syntax { position: usize, expected: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("division is not allowed in a polynomial ring")]
    DivisionNotAllowed,

    #[error("division by zero")]
    DivisionByZero,

    /// The quotient does not exist in the carrier (e.g. `1/t` in a power series ring).
    #[error("quotient does not exist in this ring")]
    NotDivisible,

    #[error("series precision exhausted")]
    PrecisionExhausted,

    #[error("operands live in different rings")]
    RingMismatch,

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),

    #[error("matrix is not idempotent")]
    NotIdempotent,

    #[error("pairing matrix is not invertible over the carrier")]
    SingularPairing,

    #[error("symmetry condition violated for {variant}")]
    ConditionViolated {
        variant: String,
        witness: Box<Witness>,
    },

    #[error("Y must be nonzero")]
    ZeroY,

    #[error("operation requires a one-variable ring")]
    NotUnivariate,

    #[error("configuration error: {0}")]
    Config(String),
}
