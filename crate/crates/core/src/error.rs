use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("context mismatch: {0}")]
    Context(String),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("matrix shape: {0}")]
    Shape(String),
    #[error("index out of range: {0}")]
    Index(String),
    #[error("entry kind: {0}")]
    Kind(String),
    #[error("symbolic size {size} exceeds guard {guard}; pass the override to force it")]
    Guard { size: usize, guard: usize },
    #[error("roots are not pairwise distinct: {0}")]
    RepeatedRoot(String),
    #[error("invalid multiplicity profile: {0}")]
    Profile(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("kernel fault: {0}")]
    Kernel(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
