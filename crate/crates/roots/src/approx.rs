//! Floating-point root estimates turned into exactly verified isolating
//! intervals. Nothing here is trusted: every interval is rechecked in integer
//! arithmetic, and any doubt sends the caller back to Sturm bisection.

use lace_poly::{BigInt, Rational};
use num_traits::{One, ToPrimitive};

use crate::isolate::sign_at;

/// Estimates carry ~50 bits; intervals are `2^-SCALE` around the estimate.
const SCALE: u32 = 24;
const MAX_ITER: usize = 200;

fn horner(c: &[f64], x: f64) -> (f64, f64, f64) {
    let (mut p, mut dp, mut ddp) = (0.0, 0.0, 0.0);
    for &a in c.iter().rev() {
        ddp = ddp * x + 2.0 * dp;
        dp = dp * x + p;
        p = p * x + a;
    }
    (p, dp, ddp)
}

/// Laguerre's method with deflation. For a real-rooted polynomial, started
/// above every root it decreases monotonically to the largest remaining root.
/// Gives up on a negative discriminant, i.e. on nonreal roots.
fn laguerre_roots(c: &[f64], start: f64) -> Option<Vec<f64>> {
    let mut q = c.to_vec();
    let mut roots = Vec::with_capacity(c.len() - 1);
    while q.len() > 1 {
        let n = (q.len() - 1) as f64;
        let mut x = start;
        for _ in 0..MAX_ITER {
            let (p, dp, ddp) = horner(&q, x);
            if p == 0.0 {
                break;
            }
            let g = dp / p;
            let h = g * g - ddp / p;
            let disc = (n - 1.0) * (n * h - g * g);
            if disc < -1e-9 * (g * g).max(1.0) {
                return None;
            }
            let denom = g + disc.max(0.0).sqrt();
            if denom == 0.0 || !denom.is_finite() {
                return None;
            }
            let step = n / denom;
            x -= step;
            if step.abs() <= 1e-15 * x.abs().max(1e-300) {
                break;
            }
        }
        roots.push(x);
        // Synthetic division by (t - x).
        let mut next = vec![0.0; q.len() - 1];
        let mut carry = 0.0;
        for i in (1..q.len()).rev() {
            carry = q[i] + carry * x;
            next[i - 1] = carry;
        }
        q = next;
    }
    Some(roots)
}

/// Newton polishing on the undeflated polynomial.
fn polish(c: &[f64], mut x: f64) -> f64 {
    for _ in 0..4 {
        let (p, dp, _) = horner(c, x);
        if dp == 0.0 || !p.is_finite() {
            break;
        }
        let next = x - p / dp;
        if !next.is_finite() {
            break;
        }
        x = next;
    }
    x
}

fn dyadic(numer: BigInt) -> Rational {
    Rational::new(numer, BigInt::one() << SCALE)
}

/// Isolating intervals for the square-free integer polynomial `s` (ascending,
/// pairwise disjoint, each an exact root or a strict sign change of width
/// `2^(1-SCALE)`), provided all its roots are real and well separated.
pub(crate) fn certified_isolation(s: &[BigInt], bound: &Rational) -> Option<Vec<(Rational, Rational)>> {
    let c: Vec<f64> = s.iter().map(|a| a.to_f64()).collect::<Option<_>>()?;
    if c.iter().any(|a| !a.is_finite()) {
        return None;
    }
    let start = bound.to_f64()? + 1.0;
    let mut roots: Vec<f64> = laguerre_roots(&c, start)?.into_iter().map(|x| polish(&c, x)).collect();
    roots.sort_by(f64::total_cmp);
    let scale = f64::from(2u32.pow(SCALE));
    let mut out: Vec<(Rational, Rational)> = Vec::with_capacity(roots.len());
    for r in roots {
        let scaled = (r * scale).round();
        if !scaled.is_finite() {
            return None;
        }
        let centre = BigInt::from(scaled as i128);
        let mid = dyadic(centre.clone());
        let interval = if sign_at(s, &mid) == 0 {
            (mid.clone(), mid)
        } else {
            let lo = dyadic(&centre - 1);
            let hi = dyadic(&centre + 1);
            if sign_at(s, &lo) * sign_at(s, &hi) >= 0 {
                return None;
            }
            (lo, hi)
        };
        if out.last().is_some_and(|prev| prev.1 >= interval.0) {
            return None;
        }
        out.push(interval);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(cs: &[i64]) -> Vec<BigInt> {
        cs.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn separated_roots_verify() {
        // (x + 1)(x + 3)(2x + 1) = 2x^3 + 9x^2 + 10x + 3
        let s = ints(&[3, 10, 9, 2]);
        let iv = certified_isolation(&s, &Rational::from_integer(6.into())).unwrap();
        assert_eq!(iv.len(), 3);
        // All three roots are dyadic and hit exactly.
        assert!(iv.iter().all(|(lo, hi)| lo == hi));
        assert_eq!(iv[0].0, Rational::from_integer((-3).into()));
    }

    #[test]
    fn irrational_roots_get_sign_changes() {
        // x^2 - 2
        let s = ints(&[-2, 0, 1]);
        let iv = certified_isolation(&s, &Rational::from_integer(3.into())).unwrap();
        assert_eq!(iv.len(), 2);
        assert!(iv.iter().all(|(lo, hi)| lo < hi));
    }

    #[test]
    fn nonreal_roots_are_rejected() {
        assert!(certified_isolation(&ints(&[1, 0, 1]), &Rational::from_integer(2.into())).is_none());
        assert!(certified_isolation(&ints(&[1, 1, 1]), &Rational::from_integer(2.into())).is_none());
    }
}
