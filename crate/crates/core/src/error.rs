use thiserror::Error;

/// Errors raised by the library. Every variant is a contract violation by
/// the caller or a tripped resource guard; none are recoverable internally.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NonPrime(u64),
    #[error("cyclic exponents must be positive")]
    NonPositiveExponent,
    #[error("operation is undefined for the trivial group")]
    TrivialGroup,
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("subgroup type is not intermediate between pG and G")]
    NotIntermediate,
    #[error("subgroup type equals the ambient group")]
    NotProper,
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("invalid index vector: {0}")]
    InvalidIndexVector(String),
    #[error("truncation {got} too small, need at least {need}")]
    TruncationTooSmall { need: usize, got: usize },
    #[error("truncation {got} exceeds the guard {max}")]
    TruncationTooLarge { max: usize, got: usize },
    #[error("q = {q} is not a power of p = {p}")]
    MismatchedCharacteristic { q: u64, p: u64 },
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("conductor exponents must be at least 2")]
    NonSquarefulConductor,
}

pub type Result<T> = std::result::Result<T, Error>;
