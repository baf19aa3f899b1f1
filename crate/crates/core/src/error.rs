use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid slope: {0}")]
    InvalidSlope(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inconsistent lattice data: {0}")]
    Inconsistent(String),
    #[error("vertex {index} out of range for a quiver on {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("geometry error: {0}")]
    Geometry(String),
    #[error("bounded search exhausted: {0}")]
    SearchExhausted(String),
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
