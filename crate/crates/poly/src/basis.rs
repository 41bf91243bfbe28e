//! Change-of-basis transforms between the monomial basis and the bases
//! `x^i (1+x)^{n-i}`, `x^i (1-x)^{n-i}` and `x^i (1+x)^{n-2i}`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::binom::binomial;
use crate::error::{PolyError, Result};
use crate::poly::{Poly, Rational};

fn binom_q(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

/// `f(x) = sum_i c_i x^i (1+x)^{n-i}`.
pub fn binomial_basis_to_std(c: &[Rational], n: usize) -> Result<Poly> {
    if c.len() != n + 1 {
        return Err(PolyError::LengthMismatch { expected: n + 1, got: c.len() });
    }
    let mut out = vec![Rational::zero(); n + 1];
    for (i, ci) in c.iter().enumerate() {
        if ci.is_zero() {
            continue;
        }
        for k in i..=n {
            out[k] += ci * binom_q(n - i, k - i);
        }
    }
    Ok(Poly::new(out))
}

/// Inverse of [`binomial_basis_to_std`]; the system is unitriangular, solved
/// by forward substitution.
pub fn std_to_binomial_basis(f: &Poly, n: usize) -> Result<Vec<Rational>> {
    if let Some(d) = f.degree() {
        if d > n {
            return Err(PolyError::DegreeExceedsBound { degree: d, bound: n });
        }
    }
    let mut c: Vec<Rational> = Vec::with_capacity(n + 1);
    for k in 0..=n {
        let mut v = f.coeff(k);
        for (i, ci) in c.iter().enumerate() {
            v -= ci * binom_q(n - i, k - i);
        }
        c.push(v);
    }
    Ok(c)
}

/// h-polynomial from `fvec[i] = f_{i-1}`: `sum_i fvec[i] x^i (1-x)^{n-i}`.
pub fn f_to_h<T: Clone + Into<BigInt>>(fvec: &[T], n: usize) -> Result<Poly> {
    if fvec.len() > n + 1 {
        return Err(PolyError::DegreeExceedsBound { degree: fvec.len() - 1, bound: n });
    }
    let mut out = vec![Rational::zero(); n + 1];
    for (i, fi) in fvec.iter().enumerate() {
        let fi: BigInt = fi.clone().into();
        if fi.is_zero() {
            continue;
        }
        let fi = Rational::from_integer(fi);
        for j in 0..=n - i {
            let term = &fi * binom_q(n - i, j);
            if j % 2 == 0 {
                out[i + j] += term;
            } else {
                out[i + j] -= term;
            }
        }
    }
    Ok(Poly::new(out))
}

/// Coordinates in the basis `x^i (1+x)^{n-2i}`, `0 <= i <= n/2`.
pub fn gamma_expansion(p: &Poly, n: usize) -> Result<Vec<Rational>> {
    if !p.reverse(n)?.eq(p) {
        return Err(PolyError::NotSymmetric(n));
    }
    let mut rest = p.clone();
    let mut gamma = Vec::with_capacity(n / 2 + 1);
    for i in 0..=n / 2 {
        let g = rest.coeff(i);
        if !g.is_zero() {
            rest = &rest - &Poly::one_plus_x_pow(n - 2 * i).shift(i).scale(&g);
        }
        gamma.push(g);
    }
    debug_assert!(rest.is_zero());
    Ok(gamma)
}

pub fn is_gamma_positive(p: &Poly, n: usize) -> bool {
    use num_traits::Signed;
    gamma_expansion(p, n).is_ok_and(|g| g.iter().all(|c| !c.is_negative()))
}

/// Numerator `(1-x)^{n+1} sum_m f(m) x^m`, given `f(0..=n)` of a polynomial
/// `f` of degree at most `n`.
pub fn series_numerator(values: &[Rational], n: usize) -> Result<Poly> {
    if values.len() != n + 1 {
        return Err(PolyError::LengthMismatch { expected: n + 1, got: values.len() });
    }
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut d = Rational::zero();
        for j in 0..=i {
            let term = binom_q(n + 1, j) * &values[i - j];
            if j % 2 == 0 {
                d += term;
            } else {
                d -= term;
            }
        }
        out.push(d);
    }
    Ok(Poly::new(out))
}
