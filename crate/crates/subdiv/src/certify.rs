//! Certificates for the strong interlacing property, the symmetric
//! decomposition theorem and its skeleton corollary.

use std::fmt;
use std::str::FromStr;

use lace_poly::{Poly, Rational, SymDecomp};
use lace_roots::{interlaces, is_interlacing_sequence, is_real_rooted, real_rooted, Certificate, Verdict};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::engine::{check_degree, PRowTable};
use crate::error::{Result, SubdivError};
use crate::ftriangle::FTriangle;
use crate::ineq::{partial_sums_above, partial_sums_below, ratio_chain, ratios};

fn labelled(mut c: Certificate, label: impl fmt::Display) -> Certificate {
    c.subject = format!("{label}: {}", c.subject);
    c
}

fn interlacing_part(p: &Poly, q: &Poly, label: String) -> (bool, Certificate) {
    match interlaces(p, q) {
        Ok(c) => (c.holds(), labelled(c, label)),
        Err(e) => {
            let mut c = Certificate::new(format!("{label}: {e}"), Verdict::NotInterlaces);
            c.push_hypothesis("both polynomials real-rooted", false);
            (false, c)
        }
    }
}

/// `θ_m` is zero or has degree `m - 1`, nonnegative coefficients and real roots.
fn theta_shape(theta: &Poly, m: usize) -> [(String, bool); 3] {
    let degree_ok = theta.is_zero() || theta.degree() == Some(m - 1);
    [
        (format!("θ zero or of degree m-1@m={m}"), degree_ok),
        (format!("θ nonnegative@m={m}"), theta.is_nonnegative()),
        (format!("θ real-rooted@m={m}"), real_rooted(theta)),
    ]
}

/// Strong interlacing with respect to `n`: `h_F(σ_m)` real-rooted for
/// `2 <= m < n` (`<= n` with `include_top`), and for `2 <= m <= n`, `θ_m` as in
/// [`theta_shape`] and interlaced by `h_F(σ_{m-1})`. Also reports whether each
/// `Q_{F,m}`, `m <= n`, is an interlacing sequence; those entries do not enter
/// the verdict but feed the `theorem conclusion consistent` entry.
pub fn strong_interlacing_of(table: &PRowTable, n: usize, include_top: bool) -> Result<Certificate> {
    if n > table.size() {
        return Err(SubdivError::OutOfRange { n, d: table.size() });
    }
    let mut cert = Certificate::new(format!("strong interlacing with respect to {n}"), Verdict::StrongInterlacing);
    let mut ok = true;
    let top = if include_top { n + 1 } else { n };
    for m in 2..top {
        let c = labelled(is_real_rooted(table.h_simplex(m)), format!("h(σ_{m})"));
        ok &= c.holds();
        cert.push_hypothesis(format!("h(σ_m) real-rooted@m={m}"), c.holds());
        cert.parts.push(c);
    }
    for m in 2..=n {
        let theta = table.theta(m);
        for (name, holds) in theta_shape(theta, m) {
            ok &= holds;
            cert.push_hypothesis(name, holds);
        }
        let (holds, part) =
            interlacing_part(table.h_simplex(m - 1), theta, format!("h(σ_{}) interlaces θ_{m}", m - 1));
        ok &= holds;
        cert.push_hypothesis(format!("h(σ_m-1) interlaces θ@m={m}"), holds);
        cert.parts.push(part);
    }
    let mut derived_ok = true;
    for m in 1..=n {
        let holds = is_interlacing_sequence(table.row(m)).is_ok_and(|c| c.holds());
        derived_ok &= holds;
        cert.push_hypothesis(format!("derived: Q_m interlacing@m={m}"), holds);
    }
    cert.push_hypothesis("theorem conclusion consistent", !ok || derived_ok);
    if !ok {
        cert.verdict = Verdict::NotStrongInterlacing;
    }
    Ok(cert)
}

/// [`strong_interlacing_of`] on the table built from `f`.
pub fn strong_interlacing_check(f: &FTriangle, n: usize, include_top: bool) -> Result<Certificate> {
    strong_interlacing_of(&PRowTable::build(f, n)?, n, include_top)
}

/// Operational substitutes for feasibility: nonnegative interior counts, a
/// consistent engine run and nonnegative `p_{F,m,k}`. Failing any of them is
/// evidence against feasibility, passing them is not a proof.
pub fn feasibility_report(f: &FTriangle, n: usize) -> Certificate {
    let mut cert = Certificate::new(format!("feasibility checks up to {n}"), Verdict::Certified);
    let interior = (0..=n.min(f.size())).all(|m| (0..=m).all(|k| f.interior_f(k, m) >= 0));
    cert.push_hypothesis("interior face counts nonnegative", interior);
    match PRowTable::build(f, n) {
        Ok(t) => {
            cert.push_hypothesis("engine consistency", true);
            let nonneg = t.rows().iter().flatten().all(Poly::is_nonnegative)
                && (1..=n).all(|m| t.theta(m).is_nonnegative());
            cert.push_hypothesis("p_(m,k) nonnegative", nonneg);
        }
        Err(e) => cert.push_hypothesis(format!("engine consistency: {e}"), false),
    }
    if !cert.all_hypotheses_hold() {
        cert.verdict = Verdict::NotCertified;
    }
    cert
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Decomposition with respect to `n`.
    A,
    /// `c_n = 0`, decomposition with respect to `n - 1`.
    B,
}

impl FromStr for Variant {
    type Err = SubdivError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "a" | "A" => Ok(Variant::A),
            "b" | "B" => Ok(Variant::B),
            _ => Err(SubdivError::Parse(format!("unknown variant `{s}`"))),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::A => "a",
            Variant::B => "b",
        })
    }
}

/// A p-row table with the strong interlacing property evaluated once for
/// every `n` up to its size, shared by repeated certifications.
#[derive(Clone, Debug)]
pub struct Certifier {
    table: PRowTable,
    strong: Vec<bool>,
}

impl Certifier {
    pub fn new(table: PRowTable) -> Self {
        let d = table.size();
        let mut strong = vec![true; d + 1];
        // Condition (i) at m enters from n = m + 1, condition (ii) at m from n = m.
        let mut ok = true;
        for m in 2..=d {
            let theta = table.theta(m);
            let theta_ok = theta_shape(theta, m).iter().all(|(_, h)| *h)
                && interlaces(table.h_simplex(m - 1), theta).is_ok_and(|c| c.holds());
            ok &= theta_ok;
            strong[m] = ok;
            ok &= real_rooted(table.h_simplex(m));
        }
        Certifier { table, strong }
    }

    pub fn from_ftriangle(f: &FTriangle, n: usize) -> Result<Self> {
        Ok(Self::new(PRowTable::build(f, n)?))
    }

    pub fn table(&self) -> &PRowTable {
        &self.table
    }

    pub fn is_strong(&self, n: usize) -> bool {
        self.strong.get(n).copied().unwrap_or(false)
    }

    /// Checks the hypotheses of the decomposition theorem for `h` and certifies
    /// the conclusions on the computed decomposition regardless of whether they hold.
    pub fn main_theorem(&self, n: usize, h: &Poly, variant: Variant) -> Result<Certificate> {
        check_degree(h, n)?;
        let c = h.padded(n);
        let mut cert = Certificate::new(String::new(), Verdict::NotNonnegSymDecomp);
        cert.push_hypothesis("strong interlacing", self.is_strong(n));
        cert.push_hypothesis("c nonnegative", c.iter().all(|x| !x.is_negative()));
        let (ineq, ratio) = match variant {
            Variant::A => (
                partial_sums_below(&c, "c-ineq1"),
                ratios(&c, 0..n, false, "ratio"),
            ),
            Variant::B => {
                cert.push_hypothesis("c_n = 0", c[n].is_zero());
                cert.push_hypothesis("n >= 1", n >= 1);
                (
                    partial_sums_above(&c, "c-ineq2"),
                    ratios(&c, 1..n.saturating_sub(1), true, "ratio-rev"),
                )
            }
        };
        cert.hypothesis_report.extend(ineq);
        let main_hyps = cert.all_hypotheses_hold();
        let ratio_hyps = ratio.iter().all(|h| h.holds);
        cert.hypothesis_report.extend(ratio);
        let chain = match variant {
            Variant::A => ratio_chain(&c, 0, n, false),
            Variant::B => n < 2 || ratio_chain(&c, 1, n - 1, true),
        };
        cert.push_hypothesis("pairwise ratio chain", chain);

        let decomposition = match variant {
            Variant::A => Some(self.table.symdecomp_closed_form(n, h)?),
            Variant::B if n >= 1 && c[n].is_zero() => Some(self.table.symdecomp_closed_form_lower(n, h)?),
            Variant::B => None,
        };
        let Some(SymDecomp { n: m, a, b }) = decomposition else {
            cert.subject = format!("D_(F,{n})({h}): no decomposition with respect to n-1");
            cert.push_hypothesis("decomposition defined", false);
            cert.push_hypothesis("theorem conclusion consistent", !main_hyps);
            return Ok(cert);
        };
        cert.subject = format!("D_(F,{n})({h}) = ({a}) + x({b}) with respect to {m}");
        let nonneg = a.is_nonnegative() && b.is_nonnegative();
        let ra = labelled(is_real_rooted(&a), "a");
        let rb = labelled(is_real_rooted(&b), "b");
        let rooted = ra.holds() && rb.holds();
        cert.parts.push(ra);
        cert.parts.push(rb);
        let mut lacing = false;
        if rooted {
            let (holds, part) = interlacing_part(&b, &a, "b interlaces a".into());
            lacing = holds;
            cert.parts.push(part);
        }
        cert.push_hypothesis("conclusion: a, b nonnegative", nonneg);
        cert.push_hypothesis("conclusion: a, b real-rooted", rooted);
        cert.push_hypothesis("conclusion: b interlaces a", lacing);
        let consistent = !main_hyps || (nonneg && rooted && (!ratio_hyps || lacing));
        cert.push_hypothesis("theorem conclusion consistent", consistent);
        cert.verdict = match (nonneg && rooted, lacing) {
            (true, true) => Verdict::InterlacingSymDecomp,
            (true, false) => Verdict::NonnegSymDecomp,
            _ => Verdict::NotNonnegSymDecomp,
        };
        Ok(cert)
    }

    /// For an `n`-dimensional `Γ` with h-vector `gamma` (length `n + 2`) and its
    /// `(n-1)`-skeleton `Δ`, `h_k(Δ) = h_0(Γ) + … + h_k(Γ)`: certifies
    /// (a) an interlacing symmetric decomposition of `h_F(Δ)` with respect to `n`
    /// and (b) `h_F(Δ)` interlaces `h_F(Γ)`.
    pub fn skeleton(&self, gamma: &[Rational], n: usize) -> Result<Certificate> {
        if gamma.len() != n + 2 {
            return Err(SubdivError::Precondition(format!(
                "Γ h-vector has length {}, expected {}",
                gamma.len(),
                n + 2
            )));
        }
        if gamma.iter().any(Signed::is_negative) {
            return Err(SubdivError::Precondition("Γ h-vector must be nonnegative".into()));
        }
        if n + 1 > self.table.size() {
            return Err(SubdivError::OutOfRange { n: n + 1, d: self.table.size() });
        }
        let mut acc = Rational::zero();
        let delta: Vec<Rational> = gamma[..=n]
            .iter()
            .map(|g| {
                acc += g;
                acc.clone()
            })
            .collect();
        let h_delta = Poly::new(delta);
        let h_gamma = Poly::new(gamma.to_vec());
        let hf_delta = self.table.apply_df(n, &h_delta)?;
        let hf_gamma = self.table.apply_df(n + 1, &h_gamma)?;

        let mut cert = Certificate::new(
            format!("skeleton: h_F(Δ) = {hf_delta}, h_F(Γ) = {hf_gamma}"),
            Verdict::Certified,
        );
        cert.push_hypothesis("strong interlacing with respect to n", self.is_strong(n));
        cert.push_hypothesis("strong interlacing with respect to n+1", self.is_strong(n + 1));
        let part_a = labelled(self.main_theorem(n, &h_delta, Variant::A)?, "(a)");
        let a_holds = part_a.verdict == Verdict::InterlacingSymDecomp;
        let (b_holds, part_b) = interlacing_part(&hf_delta, &hf_gamma, "(b) h_F(Δ) interlaces h_F(Γ)".into());
        cert.push_hypothesis("(a) interlacing symmetric decomposition", a_holds);
        cert.push_hypothesis("(b) h_F(Δ) interlaces h_F(Γ)", b_holds);
        let consistent =
            (!self.is_strong(n) || a_holds) && (!self.is_strong(n + 1) || b_holds);
        cert.push_hypothesis("theorem conclusion consistent", consistent);
        cert.parts.push(part_a);
        cert.parts.push(part_b);
        if !(a_holds && b_holds) {
            cert.verdict = Verdict::NotCertified;
        }
        Ok(cert)
    }
}

pub fn certify_main_theorem(f: &FTriangle, n: usize, h: &Poly, variant: Variant) -> Result<Certificate> {
    Certifier::from_ftriangle(f, n)?.main_theorem(n, h, variant)
}

pub fn skeleton_theorem_check(f: &FTriangle, gamma: &[Rational], n: usize) -> Result<Certificate> {
    Certifier::from_ftriangle(f, n + 1)?.skeleton(gamma, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> Poly {
        Poly::from_ints(cs)
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn barycentric_is_strong() {
        let f = FTriangle::barycentric(6);
        let c = strong_interlacing_check(&f, 6, false).unwrap();
        assert!(c.holds(), "{c:?}");
        assert_eq!(c.hypothesis("theorem conclusion consistent"), Some(true));
        assert!(strong_interlacing_check(&f, 6, true).unwrap().holds());
        let cert = Certifier::new(PRowTable::build(&f, 6).unwrap());
        assert!((0..=6).all(|n| cert.is_strong(n)));
    }

    #[test]
    fn main_theorem_examples() {
        let f = FTriangle::barycentric(3);
        let c = certify_main_theorem(&f, 3, &p(&[1, 0, 0, 1]), Variant::A).unwrap();
        assert!(matches!(c.verdict, Verdict::NonnegSymDecomp | Verdict::InterlacingSymDecomp));
        assert_eq!(c.hypothesis("c-ineq1@i=0"), Some(true));
        assert_eq!(c.hypothesis("theorem conclusion consistent"), Some(true));

        let f2 = FTriangle::barycentric(2);
        let bad = certify_main_theorem(&f2, 2, &p(&[2, 0, 1]), Variant::A).unwrap();
        assert_eq!(bad.hypothesis("c-ineq1@i=0"), Some(false));

        let c = certify_main_theorem(&FTriangle::barycentric(4), 4, &p(&[1, 3, 2]), Variant::B).unwrap();
        assert_eq!(c.verdict, Verdict::InterlacingSymDecomp, "{c:?}");
        let undefined = certify_main_theorem(&f, 3, &p(&[1, 0, 0, 1]), Variant::B).unwrap();
        assert!(!undefined.holds());
        assert_eq!(undefined.hypothesis("c_n = 0"), Some(false));
    }

    #[test]
    fn skeleton_examples() {
        let f = FTriangle::barycentric(6);
        let cert = Certifier::from_ftriangle(&f, 6).unwrap();
        for n in 0..=5 {
            let mut g = vec![0; n + 2];
            g[0] = 1;
            let c = cert.skeleton(&v(&g), n).unwrap();
            assert!(c.holds(), "n={n}: {c:?}");
        }
        assert!(cert.skeleton(&v(&[1, 2]), 2).is_err());
        assert!(cert.skeleton(&v(&[1, -1, 0]), 1).is_err());
    }

    #[test]
    fn feasibility_of_known_triangles() {
        assert!(feasibility_report(&FTriangle::barycentric(4), 4).holds());
        let mut rows = FTriangle::trivial(2).rows().to_vec();
        rows[2][1] = 1;
        let bad = FTriangle::new(rows).unwrap();
        assert!(!feasibility_report(&bad, 2).holds());
    }
}
