use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("n = {n} exceeds the brute-force ceiling of {ceiling}")]
    CeilingExceeded { n: usize, ceiling: usize },

    #[error("argument out of domain: {0}")]
    Domain(String),

    #[error("expected an integer, got {0}")]
    NonIntegral(String),

    #[error("leading coefficient vanishes at n = {0}")]
    Singular(i64),

    #[error("need at least {required} terms, got {got}")]
    InsufficientTerms { required: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
