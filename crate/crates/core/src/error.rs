use num_bigint::BigInt;
use thiserror::Error;

/// Every failure here is an invalid argument of some flavour; the variants
/// only say which precondition was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0} is not prime")]
    NotPrime(BigInt),
    #[error("invalid argument: polynomial is not monic")]
    NotMonic,
    #[error("invalid argument: zero polynomial")]
    ZeroPolynomial,
    #[error("invalid argument: expected degree at least {expected}, got {actual}")]
    DegreeTooSmall { expected: usize, actual: usize },
    #[error("invalid argument: expected degree {expected}, got {actual}")]
    WrongDegree { expected: usize, actual: usize },
    #[error("invalid argument: zero integer")]
    ZeroInteger,
    #[error("invalid argument: gcd({m}, {k}) = {gcd} is not 1")]
    NotCoprime { m: i64, k: i64, gcd: i64 },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
