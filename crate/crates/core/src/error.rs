use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("FractionalExponentSign: q -> -q^-1 applied to the fractional exponent q^{0}")]
    FractionalExponentSign(String),

    #[error("ZeroFunction: numerator vanishes identically")]
    ZeroFunction,

    #[error("LimitDoesNotExist: numerator vanishes to order {num_order} but denominator to order {den_order} at {variable} = 1")]
    LimitDoesNotExist {
        variable: char,
        num_order: usize,
        den_order: usize,
    },

    #[error("SizeMismatch: |{lambda}| = {} but |{mu}| = {}", lambda.size(), mu.size())]
    SizeMismatch { lambda: Partition, mu: Partition },

    #[error("BoundExceeded: {what} = {value} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("NonCoprime: gcd({m}, {n}) = {gcd}, torus parameters must be coprime")]
    NonCoprime { m: i64, n: i64, gcd: i64 },

    #[error("IntegralityViolation: {0}")]
    IntegralityViolation(String),

    #[error("IndexOutOfRange: generator {index} on {strands} strands")]
    IndexOutOfRange { index: i64, strands: usize },

    #[error("InvalidInput: {0}")]
    InvalidInput(String),

    #[error("Parse: {0}")]
    Parse(String),

    #[error("NotDivisible: {0}")]
    NotDivisible(String),
}

impl Error {
    /// Short machine-readable name of the error kind.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::FractionalExponentSign(_) => "FractionalExponentSign",
            Error::ZeroFunction => "ZeroFunction",
            Error::LimitDoesNotExist { .. } => "LimitDoesNotExist",
            Error::SizeMismatch { .. } => "SizeMismatch",
            Error::BoundExceeded { .. } => "BoundExceeded",
            Error::NonCoprime { .. } => "NonCoprime",
            Error::IntegralityViolation(_) => "IntegralityViolation",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse(_) => "Parse",
            Error::NotDivisible(_) => "NotDivisible",
        }
    }
}
