use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("uniformity violated: {0}")]
    UniformityViolation(String),
    #[error("{0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, ComplexError>;
