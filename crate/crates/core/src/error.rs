use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed type token `{token}`: {reason}")]
    InvalidTypeString { token: String, reason: String },

    #[error("inadmissible factor {factor}: {reason}")]
    Inadmissible { factor: String, reason: String },

    #[error("generator index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{what} must be dominant, got {coords:?}")]
    NotDominant { what: &'static str, coords: Vec<i64> },

    #[error("{what} must be nonzero")]
    ZeroWeight { what: &'static str },

    #[error("operation requires a simple root system, got `{0}`")]
    NotSimple(String),

    #[error("ambient root system is empty")]
    EmptyAmbient,

    #[error("ambient type {0} is not classical")]
    NotClassical(String),

    #[error("pairing value at index {index} is negative ({value})")]
    NegativePairing { index: usize, value: i64 },

    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("cannot parse {what} `{input}`")]
    Parse { what: &'static str, input: String },

    #[error("coordinate overflow during exact arithmetic")]
    Overflow,
}

pub type Result<T> = std::result::Result<T, Error>;
