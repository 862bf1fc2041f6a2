use thiserror::Error;

/// Failures raised by series arithmetic, oracles and closed formulas.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series is not invertible: {0}")]
    NotInvertible(String),
    #[error("illegal power: {0}")]
    IllegalPower(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("sum is not truncatable: {0}")]
    NonTruncatable(String),
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),
    #[error("insufficient precision: {0}")]
    PrecisionLoss(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
