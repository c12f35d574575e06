use thiserror::Error;

/// Errors raised by the exact and Monte Carlo pipelines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition needs an inner series with zero constant term")]
    NonZeroConstant,

    #[error("series is not invertible: constant term is zero")]
    NotInvertible,

    #[error("series is not revertible: {0}")]
    NotRevertible(&'static str),

    #[error("{what} = {value} is out of range (allowed {min}..={max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("not enough cumulant data: need {needed} terms for {what}, have {have}")]
    InsufficientData {
        what: &'static str,
        needed: usize,
        have: usize,
    },

    #[error("Cauchy coefficients must start with total mass 1, got {0}")]
    NotProbabilityMass(String),

    #[error("invalid configuration: {}", .0.join("; "))]
    InvalidConfig(Vec<String>),

    #[error("not strictly positive: lambda = {0} must exceed 1 for an inverse moment")]
    NotStrictlyPositive(String),

    #[error("cannot parse rational {0:?}: expected an integer or p/q")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
