use thiserror::Error;

/// Errors raised by the numeration, tower and identity modules.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand mismatch: {0} vs {1}")]
    DeltaMismatch(u64, u64),
    #[error("radicand {0} is a perfect square")]
    SquareRadicand(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid digit word: {0}")]
    InvalidWord(String),
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("not supported for d = {d}: {what}")]
    Unsupported { d: u32, what: &'static str },
    #[error("unknown identity family `{0}`")]
    UnknownIdentity(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
