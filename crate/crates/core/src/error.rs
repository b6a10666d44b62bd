use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {what} exceeds guard {guard}")]
    ResourceLimit { what: String, guard: usize },
    #[error("{0} is not a minimal double coset representative")]
    InvalidRepresentative(String),
    #[error("invalid shift: {0}")]
    InvalidShift(String),
    #[error("invalid weight: {0}")]
    InvalidWeight(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("unsupported specialization: {0}")]
    UnsupportedSpecialization(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
