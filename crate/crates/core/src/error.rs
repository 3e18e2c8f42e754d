use thiserror::Error;

/// Errors raised by the samplers, statistics and experiment runners.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("empty sample")]
    EmptySample,

    #[error("sample contains a non-finite value")]
    NonFinite,

    #[error("probability {0} outside [0, 1]")]
    ProbabilityOutOfRange(f64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate data: {0}")]
    Degenerate(&'static str),

    #[error("invalid permutation of length {0}")]
    InvalidPermutation(usize),

    #[error("data contains ties; apply tie_break first")]
    TiesPresent,

    #[error("n = {n} exceeds the exact enumeration limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("environment holds {len} terms but {k} were requested")]
    EnvironmentTooShort { len: usize, k: usize },

    #[error("time {0} outside the open interval (0, 1)")]
    TimeOutOfRange(f64),

    #[error("invalid grid: {0}")]
    InvalidGrid(&'static str),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Config(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
