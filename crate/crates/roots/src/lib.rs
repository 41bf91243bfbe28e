//! Exact certification of real-rootedness and interlacing by Sturm
//! sequences and rational root isolation.

mod approx;
mod cert;
mod error;
mod isolate;
mod lace;

pub use cert::{Certificate, Hypothesis, RootInterval, Verdict};
pub use error::{Result, RootError};
pub use isolate::{
    cauchy_bound, default_width, isolate_roots, isolate_roots_width, recheck_isolation,
    square_free_factors, square_free_part, sturm_root_count, IsolatingIntervals, SturmChain,
};
pub use lace::{interlaces, is_interlacing_sequence, is_real_rooted, real_rooted, recipe_transform};
