//! The operators `D_n`, `U^n_r` and `D_{n,r}`, each computed by two routes
//! that must agree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use lace_poly::{binomial_basis_to_std, series_numerator, Poly, Rational};

use crate::engine::{check_degree, PRowTable};
use crate::error::{Result, SubdivError};

/// The barycentric p-row table up to `n`, memoized.
pub fn barycentric_table(n: usize) -> Arc<PRowTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<PRowTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    cache
        .lock()
        .unwrap()
        .entry(n)
        .or_insert_with(|| Arc::new(PRowTable::barycentric(n)))
        .clone()
}

fn check_r(r: usize) -> Result<()> {
    if r == 0 {
        return Err(SubdivError::Precondition("r must be at least 1".into()));
    }
    Ok(())
}

fn mismatch(what: &str, a: &Poly, b: &Poly) -> SubdivError {
    SubdivError::PathMismatch(format!("{what}: {a} vs {b}"))
}

/// Coefficients `0..terms` of `h / (1-x)^n`, by `n` rounds of prefix sums.
pub fn series_over_one_minus_x(h: &Poly, n: usize, terms: usize) -> Vec<Rational> {
    let mut s = h.padded(terms.saturating_sub(1));
    s.truncate(terms);
    for _ in 0..n {
        for t in 1..s.len() {
            let prev = s[t - 1].clone();
            s[t] += prev;
        }
    }
    s
}

/// Coefficients `0..=n` of `(1-x)^n s`.
fn times_one_minus_x_truncated(s: &[Rational], n: usize) -> Poly {
    let full = &Poly::new(s.to_vec()) * &Poly::one_minus_x_pow(n);
    Poly::new(full.padded(n)[..=n].to_vec())
}

/// `f = sum_i c_i x^i (1+x)^{n-i}` evaluated at `0..=top`.
fn binomial_basis_values(h: &Poly, n: usize, top: usize) -> Result<Vec<Rational>> {
    check_degree(h, n)?;
    let f = binomial_basis_to_std(&h.padded(n), n)?;
    Ok((0..=top).map(|m| f.eval(&Rational::from_integer((m as i64).into()))).collect())
}

/// `D_n(h)`: `D_n(h) / (1-x)^{n+1} = sum_m f(m) x^m`, cross-checked against
/// the barycentric p-row table.
pub fn bary_d(n: usize, h: &Poly) -> Result<Poly> {
    let series = series_numerator(&binomial_basis_values(h, n, n)?, n)?;
    let table = barycentric_table(n).apply_df(n, h)?;
    if series != table {
        return Err(mismatch("D_n series vs p-row table", &series, &table));
    }
    Ok(series)
}

/// `U^n_r(h) = S^r_0((1 + x + … + x^{r-1})^n h)`, cross-checked against
/// `U^n_r(h) / (1-x)^n = S^r_0(h / (1-x)^n)`.
pub fn edgewise_u(n: usize, r: usize, h: &Poly) -> Result<Poly> {
    check_r(r)?;
    check_degree(h, n)?;
    let direct = (&Poly::ones(r).pow(n) * h).veronese(r, 0)?;
    let g = series_over_one_minus_x(h, n, r * n + 1);
    let section: Vec<Rational> = g.into_iter().step_by(r).collect();
    let series = times_one_minus_x_truncated(&section, n);
    if direct != series {
        return Err(mismatch("U^n_r Veronese vs series", &direct, &series));
    }
    Ok(direct)
}

/// `D_{n,r} = U^n_r ∘ D_n`, cross-checked against
/// `D_{n,r}(h) / (1-x)^n = f(0) + sum_{m>=1} (f(rm) - f(rm-1)) x^m`.
pub fn colored_d(n: usize, r: usize, h: &Poly) -> Result<Poly> {
    check_r(r)?;
    let composed = edgewise_u(n, r, &bary_d(n, h)?)?;
    let f = binomial_basis_values(h, n, r * n)?;
    let mut s = vec![f[0].clone()];
    s.extend((1..=n).map(|m| &f[r * m] - &f[r * m - 1]));
    let series = times_one_minus_x_truncated(&s, n);
    if composed != series {
        return Err(mismatch("D_(n,r) composition vs series", &composed, &series));
    }
    Ok(composed)
}
