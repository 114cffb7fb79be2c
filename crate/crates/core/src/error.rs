use thiserror::Error;

/// Errors raised by the exact and p-adic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator vanishes at q = {0}")]
    Pole(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("expected {expected} samples, got {actual}")]
    Length { expected: usize, actual: usize },
    #[error("outside domain: {0}")]
    Domain(String),
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),
    #[error("invalid p-adic context: {0}")]
    InvalidContext(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
