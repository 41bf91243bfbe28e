//! Exact univariate polynomial arithmetic over arbitrary-precision rationals.

mod basis;
mod binom;
mod error;
mod poly;
mod text;

pub use basis::{
    binomial_basis_to_std, f_to_h, gamma_expansion, is_gamma_positive, series_numerator,
    std_to_binomial_basis,
};
pub use binom::{binomial, binomial_cache_bound, set_binomial_cache_bound, DEFAULT_CACHE_BOUND};
pub use error::{PolyError, Result};
pub use poly::{add, mul, rat, scale, Poly, Rational, SymDecomp};
pub use text::{parse_rational, rational_serde, rational_to_string, rational_vec_serde};

pub use num_bigint::BigInt;
