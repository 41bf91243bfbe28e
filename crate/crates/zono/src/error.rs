use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZonoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("bounding box of the dilate has {points} lattice points, above the limit {limit}")]
    TooLarge { points: u128, limit: u128 },
    #[error("independent computation paths disagree: {0}")]
    PathMismatch(String),
    #[error(transparent)]
    Poly(#[from] lace_poly::PolyError),
    #[error(transparent)]
    Subdiv(#[from] lace_subdiv::SubdivError),
}

pub type Result<T> = std::result::Result<T, ZonoError>;
