//! Error types shared across the crate.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum CoreError {
    #[error("divergent eps limit: nonzero coefficient at eps^{exponent}")]
    DivergentLimit { exponent: i64 },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("basis map not invertible: {0}")]
    NotInvertible(String),

    #[error("coefficient function has a pole at the base point: {0}")]
    PoleAtBasePoint(String),

    #[error("jet order {have} insufficient, need {need}")]
    InsufficientJetOrder { have: usize, need: usize },

    #[error("unknown generator {0}")]
    UnknownGenerator(String),

    #[error("missing generator slot {0}")]
    MissingSlot(String),

    #[error("zero denominator Pochhammer at term {0}")]
    ZeroDenominatorPochhammer(usize),

    #[error("operator singular at t = 0")]
    SingularAtZero,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("evaluation outside the valid domain: {0}")]
    EvaluationDomainError(String),
}
