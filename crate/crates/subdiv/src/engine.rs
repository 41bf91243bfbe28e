//! The recurrence for `p_{F,n,k}` and the closed-form symmetric decomposition.

use lace_poly::{Poly, Rational, SymDecomp};
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Result, SubdivError};
use crate::ftriangle::FTriangle;

/// `p_{F,m,k}(x)` for `0 <= k <= m <= n`, plus `θ_F(σ_m, x) = p_{F,m-1,m}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PRowTable {
    rows: Vec<Vec<Poly>>,
    /// `thetas[m]` for `1 <= m <= n`; `thetas[0]` is zero.
    thetas: Vec<Poly>,
}

/// Row `m` from row `m - 1` extended by `θ_m`:
/// `p_{m,k} = x Σ_{i<k} ext_i + Σ_{i>=k} ext_i`.
fn next_row(ext: &[Poly]) -> Vec<Poly> {
    let m = ext.len() - 1;
    let total: Poly = ext.iter().sum();
    let mut head = Poly::zero();
    let mut tail = total;
    let mut row = Vec::with_capacity(m + 1);
    for k in 0..=m {
        if k > 0 {
            head = &head + &ext[k - 1];
            tail = &tail - &ext[k - 1];
        }
        row.push(&head.shift(1) + &tail);
    }
    row
}

impl PRowTable {
    /// Runs the recurrence from `p_{0,0} = 1`, taking `θ_m` as the difference of
    /// `h_F(σ_m)` and the boundary sum of row `m - 1`. The boundary sum is checked
    /// against `h_F(∂σ_m)` computed from the triangle's interior counts, and every
    /// row against the reciprocity symmetries.
    pub fn build(f: &FTriangle, n: usize) -> Result<Self> {
        if n > f.size() {
            return Err(SubdivError::OutOfRange { n, d: f.size() });
        }
        let mut rows = vec![vec![Poly::one()]];
        let mut thetas = vec![Poly::zero()];
        for m in 1..=n {
            let h = f.h_simplex(m)?;
            let boundary: Poly = rows[m - 1].iter().sum();
            let expected = f.h_boundary(m)?;
            if boundary != expected {
                return Err(SubdivError::InconsistentFTriangle(format!(
                    "m={m}: row sum {boundary} differs from h(∂σ_{m}) = {expected}"
                )));
            }
            let theta = &h - &boundary;
            let mut ext = rows[m - 1].clone();
            ext.push(theta.clone());
            let row = next_row(&ext);
            if row[0] != h {
                return Err(SubdivError::InconsistentFTriangle(format!("m={m}: p_(m,0) != h(σ_m)")));
            }
            thetas.push(theta);
            rows.push(row);
        }
        let table = PRowTable { rows, thetas };
        table.check_symmetries()?;
        Ok(table)
    }

    /// Runs the recurrence with prescribed `θ_1, …, θ_n` (index 0 ignored).
    pub fn from_thetas(thetas: Vec<Poly>) -> Self {
        let n = thetas.len() - 1;
        let mut rows = vec![vec![Poly::one()]];
        for m in 1..=n {
            let mut ext = rows[m - 1].clone();
            ext.push(thetas[m].clone());
            rows.push(next_row(&ext));
        }
        let mut thetas = thetas;
        thetas[0] = Poly::zero();
        PRowTable { rows, thetas }
    }

    /// Assembles a table from rows computed elsewhere.
    pub fn from_parts(rows: Vec<Vec<Poly>>, thetas: Vec<Poly>) -> Result<Self> {
        if rows.len() != thetas.len() || rows.iter().enumerate().any(|(m, r)| r.len() != m + 1) {
            return Err(SubdivError::Precondition("malformed p-row table".into()));
        }
        Ok(PRowTable { rows, thetas })
    }

    /// Barycentric subdivision: every `θ` vanishes.
    pub fn barycentric(n: usize) -> Self {
        Self::from_thetas(vec![Poly::zero(); n + 1])
    }

    fn check_symmetries(&self) -> Result<()> {
        for (m, row) in self.rows.iter().enumerate() {
            for (k, p) in row.iter().enumerate() {
                if p.reverse(m).ok().as_ref() != Some(&row[m - k]) {
                    return Err(SubdivError::InconsistentFTriangle(format!(
                        "x^{m} p_({m},{k})(1/x) != p_({m},{})",
                        m - k
                    )));
                }
            }
            if m >= 1 && !self.thetas[m].is_symmetric(m) {
                return Err(SubdivError::InconsistentFTriangle(format!("θ_{m} is not symmetric")));
            }
        }
        Ok(())
    }

    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<Poly>] {
        &self.rows
    }

    pub fn p(&self, n: usize, k: usize) -> &Poly {
        &self.rows[n][k]
    }

    /// `Q_{F,n} = (p_{n,0}, …, p_{n,n})`.
    pub fn row(&self, n: usize) -> &[Poly] {
        &self.rows[n]
    }

    pub fn theta(&self, m: usize) -> &Poly {
        &self.thetas[m]
    }

    /// `h_F(σ_n, x) = p_{n,0}`.
    pub fn h_simplex(&self, n: usize) -> &Poly {
        &self.rows[n][0]
    }

    /// `P_{F,n} = (p_{n-1,0}, …, p_{n-1,n-1}, θ_n)`.
    pub fn p_family(&self, n: usize) -> Vec<Poly> {
        assert!(n >= 1);
        let mut v = self.rows[n - 1].clone();
        v.push(self.thetas[n].clone());
        v
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n > self.size() {
            return Err(SubdivError::OutOfRange { n, d: self.size() });
        }
        Ok(())
    }

    /// `D_{F,n}(h) = Σ c_k p_{F,n,k}`.
    pub fn apply_df(&self, n: usize, h: &Poly) -> Result<Poly> {
        self.check_n(n)?;
        check_degree(h, n)?;
        Ok(h.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| self.rows[n][k].scale(c))
            .sum())
    }

    /// Symmetric decomposition of `D_{F,n}(h)` with respect to `n` from row
    /// `n - 1` and `θ_n`, asserted equal to the generic decomposition.
    pub fn symdecomp_closed_form(&self, n: usize, h: &Poly) -> Result<SymDecomp> {
        self.check_n(n)?;
        check_degree(h, n)?;
        let closed = if n == 0 {
            SymDecomp { n, a: h.clone(), b: Poly::zero() }
        } else {
            closed_form_decomposition(&self.p_family(n), h, n)
        };
        let generic = self.apply_df(n, h)?.symmetric_decomposition(n)?;
        if closed != generic {
            return Err(SubdivError::PathMismatch(format!(
                "closed-form decomposition ({}, {}) vs generic ({}, {})",
                closed.a, closed.b, generic.a, generic.b
            )));
        }
        Ok(closed)
    }

    /// Decomposition of `D_{F,n}(h)` with respect to `n - 1` for `deg h < n`,
    /// through the reversal `x^n h(1/x)`: if that image decomposes as
    /// `ã + x b̃` with respect to `n`, the original decomposes as `b̃ + x (ã/x)`.
    pub fn symdecomp_closed_form_lower(&self, n: usize, h: &Poly) -> Result<SymDecomp> {
        self.check_n(n)?;
        if n == 0 {
            return Err(SubdivError::Precondition("decomposition with respect to -1".into()));
        }
        check_degree(h, n - 1)?;
        let rev = h.reverse(n)?;
        let tilde = closed_form_decomposition(&self.p_family(n), &rev, n);
        let (q, r) = tilde.a.div_rem(&Poly::x());
        if !r.is_zero() {
            return Err(SubdivError::PathMismatch("ã(0) != 0 for a reversed input".into()));
        }
        let closed = SymDecomp { n: n - 1, a: tilde.b, b: q };
        let generic = self.apply_df(n, h)?.symmetric_decomposition(n - 1)?;
        if closed != generic {
            return Err(SubdivError::PathMismatch(format!(
                "reversed closed-form decomposition ({}, {}) vs generic ({}, {})",
                closed.a, closed.b, generic.a, generic.b
            )));
        }
        Ok(closed)
    }
}

pub(crate) fn check_degree(h: &Poly, n: usize) -> Result<()> {
    match h.degree() {
        Some(d) if d > n => Err(lace_poly::PolyError::DegreeExceedsBound { degree: d, bound: n }.into()),
        _ => Ok(()),
    }
}

/// `a = (Σ c) θ_n + Σ_{i<n} (C_i + x C_{n-i-1}) p_{n-1,i}` and
/// `b = Σ_{i<n} (T_i - C_i) p_{n-1,i}`, where `C_i = c_0 + … + c_i` and
/// `T_i = c_n + … + c_{n-i}`. `family` is `(p_{n-1,0}, …, p_{n-1,n-1}, θ_n)`.
pub fn closed_form_decomposition(family: &[Poly], h: &Poly, n: usize) -> SymDecomp {
    assert_eq!(family.len(), n + 1);
    let c = h.padded(n);
    let mut head = Vec::with_capacity(n + 1);
    let mut acc = Rational::zero();
    for ci in &c {
        acc += ci;
        head.push(acc.clone());
    }
    let mut tail = Vec::with_capacity(n + 1);
    let mut acc = Rational::zero();
    for ci in c.iter().rev() {
        acc += ci;
        tail.push(acc.clone());
    }
    let mut a = family[n].scale(&head[n]);
    let mut b = Poly::zero();
    for i in 0..n {
        let coef = Poly::new(vec![head[i].clone(), head[n - i - 1].clone()]);
        a = &a + &(&coef * &family[i]);
        b = &b + &family[i].scale(&(&tail[i] - &head[i]));
    }
    SymDecomp { n, a, b }
}
