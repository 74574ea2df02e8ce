use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("value {value} outside the invariant interval [{lo}, {hi}] for alpha = {alpha}")]
    Domain { alpha: f64, value: f64, lo: f64, hi: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    #[error("lag series not warm: {filled} of {needed} states buffered")]
    NotWarm { filled: usize, needed: usize },

    #[error("bit stream exhausted after {bits_consumed} bits with {distinct} of {needed} distinct words")]
    Exhausted { bits_consumed: u64, distinct: usize, needed: usize },

    #[error("not a bijection: value {value} repeated at index {index}")]
    NotBijective { value: u32, index: usize },

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("image format error: {0}")]
    Format(String),

    #[error("S-box family has {available} members but {needed} are required")]
    FamilyTooSmall { available: usize, needed: usize },

    #[error("I/O error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
