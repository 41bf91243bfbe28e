//! Lattice zonotopes: Ehrhart polynomials by the zonotope formula, brute-force
//! lattice point counts, and the `h*` and `h*_r` polynomials with their
//! real-rootedness certificates.

mod ehrhart;
mod error;
mod linalg;
mod zonotope;

pub use ehrhart::{
    binomial_coordinates, certify_zonotope, count_interior_points, count_lattice_points,
    ehrhart_polynomial, hstar, hstar_r, interior_point_exists, BOX_LIMIT,
};
pub use error::{Result, ZonoError};
pub use zonotope::Zonotope;
