//! Random coefficient vectors satisfying the decomposition theorem's hypotheses.

use lace_poly::{Poly, Rational};
use rand::Rng;

use crate::certify::Variant;
use crate::ineq::{partial_sums_above, partial_sums_below, ratios};

fn to_rationals(c: &[u32]) -> Vec<Rational> {
    c.iter().map(|&x| Rational::from_integer(x.into())).collect()
}

/// Whether `c` (length `n + 1`) satisfies the hypotheses of `variant`, and
/// additionally the ratio conditions when `with_ratio` is set.
pub fn satisfies_hypotheses(c: &[Rational], variant: Variant, with_ratio: bool) -> bool {
    let n = c.len() - 1;
    let all = |v: Vec<lace_roots::Hypothesis>| v.iter().all(|h| h.holds);
    match variant {
        Variant::A => all(partial_sums_below(c, "")) && (!with_ratio || all(ratios(c, 0..n, false, ""))),
        Variant::B => {
            n >= 1
                && c[n] == Rational::from_integer(0.into())
                && all(partial_sums_above(c, ""))
                && (!with_ratio || all(ratios(c, 1..n.saturating_sub(1), true, "")))
        }
    }
}

/// A nonnegative integer `h` of degree at most `n` with entries at most
/// `bound`, satisfying the hypotheses of `variant` (and the ratio conditions
/// when `with_ratio`). Rejection sampling first; after `tries` misses, a
/// sorted vector, which satisfies everything by construction: nondecreasing
/// for variant (a), nonincreasing on `c_0..c_{n-1}` for variant (b).
pub fn sample_h<R: Rng + ?Sized>(rng: &mut R, n: usize, variant: Variant, with_ratio: bool, bound: u32) -> Poly {
    assert!(variant == Variant::A || n >= 1, "variant (b) needs n >= 1");
    let draw = |rng: &mut R| -> Vec<u32> {
        let mut c: Vec<u32> = (0..=n).map(|_| rng.gen_range(0..=bound)).collect();
        if variant == Variant::B {
            c[n] = 0;
        }
        c
    };
    for _ in 0..200 {
        let c = to_rationals(&draw(rng));
        if satisfies_hypotheses(&c, variant, with_ratio) {
            return Poly::new(c);
        }
    }
    let mut c = draw(rng);
    match variant {
        Variant::A => c.sort_unstable(),
        Variant::B => c[..n].sort_unstable_by(|a, b| b.cmp(a)),
    }
    let c = to_rationals(&c);
    debug_assert!(satisfies_hypotheses(&c, variant, with_ratio));
    Poly::new(c)
}
