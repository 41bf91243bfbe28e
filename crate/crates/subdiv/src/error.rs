use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubdivError {
    #[error("index {n} exceeds f-triangle size {d}")]
    OutOfRange { n: usize, d: usize },
    #[error("inconsistent f-triangle: {0}")]
    InconsistentFTriangle(String),
    #[error("independent computation paths disagree: {0}")]
    PathMismatch(String),
    #[error("{0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Poly(#[from] lace_poly::PolyError),
    #[error(transparent)]
    Root(#[from] lace_roots::RootError),
    #[error(transparent)]
    Complex(#[from] lace_simplicial::ComplexError),
}

pub type Result<T> = std::result::Result<T, SubdivError>;
