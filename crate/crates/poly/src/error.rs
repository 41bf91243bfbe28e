use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("degree {degree} exceeds bound {bound}")]
    DegreeExceedsBound { degree: usize, bound: usize },
    #[error("bad Veronese section index: r={r}, k={k}")]
    BadSectionIndex { r: usize, k: usize },
    #[error("polynomial is not symmetric with respect to {0}")]
    NotSymmetric(usize),
    #[error("expected {expected} coefficients, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, PolyError>;
