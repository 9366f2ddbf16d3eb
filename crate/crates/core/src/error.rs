use thiserror::Error;

/// Every failure the library can signal. Precondition failures of the
/// bijection each get their own variant so callers can report precisely.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts are not weakly decreasing positive integers: {0:?}")]
    InvalidPartition(Vec<u64>),
    #[error("beta-set must be strictly decreasing positive integers: {0:?}")]
    InvalidBetaSet(Vec<u64>),
    #[error("({s}, {t}) is not a coprime pair with s < t")]
    InvalidPair { s: u64, t: u64 },
    #[error("s must be an odd positive integer, got {0}")]
    EvenOrZeroS(u64),
    #[error("{x} is not a gap of P({s},{t})")]
    NotAGap { x: u64, s: u64, t: u64 },
    #[error("({a}, {b}) lies outside P'({s},{t})")]
    OutsidePoset { a: u64, b: u64, s: u64, t: u64 },
    #[error("({a}, {b}) is not in the {expected} part")]
    WrongSide { a: u64, b: u64, expected: char },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: u64, max: u64 },
    #[error("not an ({s}, {t})-core")]
    NotCore { s: u64, t: u64 },
    #[error("parts not distinct")]
    PartsNotDistinct,
    #[error("not an order ideal of P({s},{t})")]
    NotOrderIdeal { s: u64, t: u64 },
    #[error("ideal contains the adjacent integers {0} and {1}")]
    AdjacentIntegers(u64, u64),
    #[error("height sequence is not balanced: {0}")]
    NotBalanced(String),
    #[error("path endpoint not positive: {0}")]
    EndpointNotPositive(i64),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("enumeration guard exceeded: poset size {size} > limit {limit}")]
    GuardExceeded { size: u64, limit: u64 },
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
