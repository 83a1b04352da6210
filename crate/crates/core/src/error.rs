use thiserror::Error;

/// Errors raised by the arithmetic layers and the check registry.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: u128, modulus: u128 },

    #[error("{0} is not p-integral at p = {1}")]
    NotPIntegral(String, u64),

    #[error("division would leave a negative {0}-adic valuation")]
    NegativeValuation(u64),

    #[error("index {index} exceeds the configured bound {bound}")]
    BoundExceeded { index: usize, bound: usize },

    #[error("{a} is not coprime to {p}")]
    NotCoprime { a: i128, p: u64 },

    #[error("{0}")]
    IndexTermNotDivisible(String),

    #[error("prime {p} is not admissible here: {reason}")]
    BadPrime { p: u64, reason: String },

    #[error("{0}")]
    ValuationTooLow(String),

    #[error("invalid modulus {p}^{e}: {reason}")]
    InvalidModulus { p: u64, e: u32, reason: &'static str },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("integer overflow in rational arithmetic")]
    Overflow,

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("cannot parse {0:?} as a rational c/d")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
