use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootError {
    #[error("the zero polynomial has no isolated roots")]
    ZeroPolynomial,
    #[error("an interval endpoint is a root")]
    EndpointIsRoot,
    #[error("empty interval: lo must be below hi")]
    EmptyInterval,
    #[error("{0} is not real-rooted")]
    NotRealRooted(String),
    #[error(transparent)]
    Poly(#[from] lace_poly::PolyError),
}

pub type Result<T> = std::result::Result<T, RootError>;
