//! Abstract simplicial complexes: face enumeration, f- and h-vectors,
//! skeleta, and literal barycentric, edgewise and colored subdivisions.

mod cliques;
mod complex;
mod construct;
mod error;
mod extract;
mod random;

pub use complex::{SimplicialComplex, Vertex};
pub use construct::{
    barycentric_subdivision, colored_subdivision, edgewise_subdivision, Construction,
    EdgewiseVertex, Subdivision,
};
pub use error::{ComplexError, Result};
pub use extract::extract_rows;
pub use random::{random_complex, random_mixed_complex};
