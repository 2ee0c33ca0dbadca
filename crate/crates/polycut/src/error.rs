use crate::complex::ValidationReport;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("illegal flip: {0}")]
    FlipIllegal(String),
    #[error("oracle scale exceeded: graph has {n} vertices, enumeration limit is {max_n}")]
    OracleScaleExceeded { n: usize, max_n: usize },
    #[error("complex failed validation: {}", .0.summary())]
    InvalidComplex(Box<ValidationReport>),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
