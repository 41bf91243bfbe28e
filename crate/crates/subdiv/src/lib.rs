//! Uniform triangulations through their f-triangles: the recurrence for the
//! polynomials `p_{F,n,k}`, the operators `E_F`, `D_{F,n}`, `D_n`, `U^n_r`,
//! `D_{n,r}`, and certification of the strong interlacing property and the
//! symmetric decomposition theorems built on it.

mod certify;
mod colored;
mod engine;
mod error;
mod ftriangle;
mod ineq;
mod operators;
mod sample;

pub use certify::{
    certify_main_theorem, feasibility_report, skeleton_theorem_check, strong_interlacing_check,
    strong_interlacing_of, Certifier, Variant,
};
pub use colored::{colored_p_table, colored_theta, ColoredPTable};
pub use engine::{closed_form_decomposition, PRowTable};
pub use error::{Result, SubdivError};
pub use ftriangle::FTriangle;
pub use ineq::{hvec_inequalities, IneqKind, IneqReport};
pub use operators::{barycentric_table, bary_d, colored_d, edgewise_u, series_over_one_minus_x};
pub use sample::{sample_h, satisfies_hypotheses};
