//! Partial-sum and ratio inequalities on coefficient vectors.

use std::fmt;
use std::str::FromStr;

use lace_poly::Rational;
use lace_roots::Hypothesis;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::SubdivError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum IneqKind {
    /// `h_0 + … + h_i <= h_n + … + h_{n-i}` for `0 <= i <= n/2`.
    CmStar,
    /// `h_0/h_n <= h_1/h_{n-1} <= … <= h_n/h_0`, cross-multiplied.
    Tzanaki,
    /// `h_1/h_{n-1} >= h_2/h_{n-2} >= … >= h_{n-1}/h_1`, skipping zero entries.
    Tzanakii,
    /// The same partial sums as [`IneqKind::CmStar`], on operator coefficients.
    C1,
    /// `c_n = 0` and `c_0 + … + c_i >= c_{n-1} + … + c_{n-i}` for `1 <= i <= n/2`.
    C2,
}

impl FromStr for IneqKind {
    type Err = SubdivError;

    fn from_str(s: &str) -> Result<Self, SubdivError> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "cmstar" | "cm*" => IneqKind::CmStar,
            "tzanaki" => IneqKind::Tzanaki,
            "tzanakii" => IneqKind::Tzanakii,
            "c1" => IneqKind::C1,
            "c2" => IneqKind::C2,
            _ => return Err(SubdivError::Parse(format!("unknown inequality family `{s}`"))),
        })
    }
}

impl fmt::Display for IneqKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IneqKind::CmStar => "cmstar",
            IneqKind::Tzanaki => "tzanaki",
            IneqKind::Tzanakii => "tzanakii",
            IneqKind::C1 => "c1",
            IneqKind::C2 => "c2",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IneqReport {
    pub kind: IneqKind,
    pub entries: Vec<Hypothesis>,
}

impl IneqReport {
    pub fn holds(&self) -> bool {
        self.entries.iter().all(|h| h.holds)
    }
}

fn entry(name: String, holds: bool) -> Hypothesis {
    Hypothesis { name, holds }
}

fn prefix(v: &[Rational], range: impl Iterator<Item = usize>) -> Rational {
    range.map(|i| v[i].clone()).fold(Rational::zero(), |a, b| a + b)
}

/// `h_0 + … + h_i <= h_n + … + h_{n-i}` for `0 <= i <= n/2`.
pub(crate) fn partial_sums_below(v: &[Rational], label: &str) -> Vec<Hypothesis> {
    let n = v.len() - 1;
    (0..=n / 2)
        .map(|i| {
            let holds = prefix(v, 0..=i) <= prefix(v, n - i..=n);
            entry(format!("{label}@i={i}"), holds)
        })
        .collect()
}

/// `c_0 + … + c_i >= c_{n-1} + … + c_{n-i}` for `1 <= i <= n/2`.
pub(crate) fn partial_sums_above(v: &[Rational], label: &str) -> Vec<Hypothesis> {
    let n = v.len() - 1;
    (1..=n / 2)
        .map(|i| {
            let holds = prefix(v, 0..=i) >= prefix(v, n - i..n);
            entry(format!("{label}@i={i}"), holds)
        })
        .collect()
}

/// `v_i v_{n-i-1} <= v_{i+1} v_{n-i}` (or `>=` when `reversed`) for `i` in `range`.
pub(crate) fn ratios(
    v: &[Rational],
    range: impl Iterator<Item = usize>,
    reversed: bool,
    label: &str,
) -> Vec<Hypothesis> {
    let n = v.len() - 1;
    range
        .map(|i| {
            let lhs = &v[i] * &v[n - i - 1];
            let rhs = &v[i + 1] * &v[n - i];
            let holds = if reversed { lhs >= rhs } else { lhs <= rhs };
            entry(format!("{label}@i={i}"), holds)
        })
        .collect()
}

/// `v_i v_{n-j} <= v_j v_{n-i}` (or `>=` when `reversed`) for all `lo <= i < j <= hi`:
/// the ratios `v_k / v_{n-k}` form a monotone chain even across zero entries,
/// where the adjacent form loses transitivity.
pub(crate) fn ratio_chain(v: &[Rational], lo: usize, hi: usize, reversed: bool) -> bool {
    let n = v.len() - 1;
    (lo..=hi).all(|i| {
        (i + 1..=hi).all(|j| {
            let lhs = &v[i] * &v[n - j];
            let rhs = &v[j] * &v[n - i];
            if reversed { lhs >= rhs } else { lhs <= rhs }
        })
    })
}

/// `a/b >= c/d` without dividing; both denominators nonzero.
fn ratio_ge(a: &Rational, b: &Rational, c: &Rational, d: &Rational) -> bool {
    let (lhs, rhs) = (a * d, c * b);
    if (b * d).is_negative() { lhs <= rhs } else { lhs >= rhs }
}

/// Evaluates one inequality family on `hvec = (h_0, …, h_n)`.
pub fn hvec_inequalities(hvec: &[Rational], kind: IneqKind) -> IneqReport {
    if hvec.is_empty() {
        return IneqReport { kind, entries: Vec::new() };
    }
    let n = hvec.len() - 1;
    let entries = match kind {
        IneqKind::CmStar => partial_sums_below(hvec, "cmstar"),
        IneqKind::C1 => partial_sums_below(hvec, "c-ineq1"),
        IneqKind::C2 => {
            let mut e = vec![entry("c_n = 0".into(), hvec[n].is_zero())];
            e.extend(partial_sums_above(hvec, "c-ineq2"));
            e
        }
        IneqKind::Tzanaki => ratios(hvec, 0..n, false, "tzanaki"),
        IneqKind::Tzanakii => {
            let kept: Vec<usize> =
                (1..n).filter(|&i| !hvec[i].is_zero() && !hvec[n - i].is_zero()).collect();
            kept.windows(2)
                .map(|w| {
                    let (i, j) = (w[0], w[1]);
                    let holds = ratio_ge(&hvec[i], &hvec[n - i], &hvec[j], &hvec[n - j]);
                    entry(format!("tzanakii@i={i},j={j}"), holds)
                })
                .collect()
        }
    };
    IneqReport { kind, entries }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn symmetric_vector_is_cmstar() {
        let r = hvec_inequalities(&v(&[1, 4, 1]), IneqKind::CmStar);
        assert!(r.holds());
        assert_eq!(r.entries.len(), 2);
    }

    #[test]
    fn ball_type_vector() {
        let h = v(&[1, 3, 4, 1, 1, 0]);
        let c2 = hvec_inequalities(&h, IneqKind::C2);
        assert!(c2.holds());
        let t = hvec_inequalities(&h, IneqKind::Tzanakii);
        let verdicts: Vec<bool> = t.entries.iter().map(|e| e.holds).collect();
        // 3/1 >= 4/1 fails, 4/1 >= 1/4 holds, 1/4 >= 1/3 fails.
        assert_eq!(verdicts, vec![false, true, false]);
    }

    #[test]
    fn nondecreasing_vectors_satisfy_c1_and_ratios() {
        let h = v(&[1, 2, 2, 5, 7]);
        assert!(hvec_inequalities(&h, IneqKind::C1).holds());
        assert!(hvec_inequalities(&h, IneqKind::Tzanaki).holds());
    }

    #[test]
    fn zero_entries_are_skipped() {
        let h = v(&[1, 0, 3, 0, 1]);
        let t = hvec_inequalities(&h, IneqKind::Tzanakii);
        assert!(t.entries.is_empty());
        assert_eq!("CM*".parse::<IneqKind>().unwrap(), IneqKind::CmStar);
        assert!("c3".parse::<IneqKind>().is_err());
    }
}
