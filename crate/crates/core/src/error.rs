use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("sequence too short: need {needed} terms, have {available}")]
    InsufficientLength { needed: usize, available: usize },
    #[error("prefix mismatch at index {index}: expected {expected}, found {found}")]
    PrefixMismatch {
        index: usize,
        expected: String,
        found: String,
    },
    #[error("series has zero constant term")]
    ZeroConstantTerm,
    #[error("constant term {0} is not supported for series square root (must be 1)")]
    NonUnitConstant(String),
    #[error("division by x^{power} leaves nonzero coefficient at x^{index}")]
    Cancellation { power: usize, index: usize },
    #[error("unknown identifier: {0}")]
    UnknownId(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("tail certification failed: {0}")]
    Certification(String),
    #[error("sequence {0} not found")]
    NotFound(String),
    #[error("network unavailable: {0}")]
    NetworkUnavailable(String),
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
