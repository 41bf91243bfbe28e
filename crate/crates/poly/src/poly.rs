use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{PolyError, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Dense polynomial with exact rational coefficients, lowest degree first.
///
/// Trailing zeros are always trimmed, so the zero polynomial has an empty
/// coefficient vector and `degree() == None`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

/// The unique `p = a + x·b` with `a` symmetric about degree `n` and `b`
/// symmetric about degree `n − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymDecomp {
    pub n: usize,
    pub a: Poly,
    pub b: Poly,
}

impl SymDecomp {
    pub fn reconstruct(&self) -> Poly {
        &self.a + &self.b.shift(1)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a.is_nonnegative() && self.b.is_nonnegative()
    }
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn x() -> Self {
        Poly::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn from_ints<T: Copy + Into<BigInt>>(cs: &[T]) -> Self {
        Poly::new(cs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    /// `1 + x + ... + x^{r-1}`.
    pub fn ones(r: usize) -> Self {
        Poly::new(vec![Rational::one(); r])
    }

    /// `(1 + x)^n`.
    pub fn one_plus_x_pow(n: usize) -> Self {
        Poly::new((0..=n).map(|k| Rational::from_integer(crate::binomial(n, k))).collect())
    }

    /// `(1 - x)^n`.
    pub fn one_minus_x_pow(n: usize) -> Self {
        Poly::new(
            (0..=n)
                .map(|k| {
                    let c = Rational::from_integer(crate::binomial(n, k));
                    if k % 2 == 1 { -c } else { c }
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients `0..=n`, zero-padded.
    pub fn padded(&self, n: usize) -> Vec<Rational> {
        (0..=n).map(|i| self.coeff(i)).collect()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    fn check_bound(&self, n: usize) -> Result<()> {
        match self.degree() {
            Some(d) if d > n => Err(PolyError::DegreeExceedsBound { degree: d, bound: n }),
            _ => Ok(()),
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(sd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if sd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); sd - dd + 1];
        for i in (0..=sd - dd).rev() {
            let c = &rem[i + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r.primitive();
        }
        a.monic()
    }

    /// Positive rational multiple with coprime integer coefficients.
    pub fn primitive(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let ints = self.integer_multiple();
        Poly::new(ints.into_iter().map(Rational::from_integer).collect())
    }

    /// Integer coefficients of the primitive positive multiple of `self`.
    pub fn integer_multiple(&self) -> Vec<BigInt> {
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|c| c / &g).collect()
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// `x^n p(1/x)`.
    pub fn reverse(&self, n: usize) -> Result<Poly> {
        self.check_bound(n)?;
        Ok(Poly::new((0..=n).rev().map(|i| self.coeff(i)).collect()))
    }

    pub fn is_symmetric(&self, n: usize) -> bool {
        self.reverse(n).is_ok_and(|r| &r == self)
    }

    pub fn symmetric_decomposition(&self, n: usize) -> Result<SymDecomp> {
        self.check_bound(n)?;
        if n == 0 {
            return Ok(SymDecomp { n, a: self.clone(), b: Poly::zero() });
        }
        // b_i = sum_{j<=i} (p_{n-j} - p_j), read off by comparing p with its reversal.
        let mut b = Vec::with_capacity(n);
        let mut acc = Rational::zero();
        for i in 0..n {
            acc += self.coeff(n - i) - self.coeff(i);
            b.push(acc.clone());
        }
        let b = Poly::new(b);
        let a = self - &b.shift(1);
        Ok(SymDecomp { n, a, b })
    }

    /// `S^r_k`: coefficient `m` of the result is coefficient `rm + k` of `self`.
    pub fn veronese(&self, r: usize, k: usize) -> Result<Poly> {
        if r == 0 || k >= r {
            return Err(PolyError::BadSectionIndex { r, k });
        }
        Ok(Poly::new(self.coeffs.iter().skip(k).step_by(r).cloned().collect()))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients rise weakly, then fall weakly (internal zeros count as a dip).
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 1;
        while i < c.len() && c[i] >= c[i - 1] {
            i += 1;
        }
        while i < c.len() && c[i] <= c[i - 1] {
            i += 1;
        }
        i >= c.len()
    }

    pub fn is_log_concave(&self) -> bool {
        let c = &self.coeffs;
        (1..c.len().saturating_sub(1)).all(|i| &c[i] * &c[i] >= &c[i - 1] * &c[i + 1])
    }

    pub fn sum_coeffs(&self) -> Rational {
        self.coeffs.iter().fold(Rational::zero(), |a, c| a + c)
    }
}

fn add_coeffs(a: &[Rational], b: &[Rational], negate_b: bool) -> Poly {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
        let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
        out.push(if negate_b { x - y } else { x + y });
    }
    Poly::new(out)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        add_coeffs(&self.coeffs, &rhs.coeffs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: &Poly) -> Poly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| &a + &b)
    }
}

impl<'a> std::iter::Sum<&'a Poly> for Poly {
    fn sum<I: Iterator<Item = &'a Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |a, b| &a + b)
    }
}

pub fn add(p: &Poly, q: &Poly) -> Poly {
    p + q
}

pub fn mul(p: &Poly, q: &Poly) -> Poly {
    p * q
}

pub fn scale(p: &Poly, c: &Rational) -> Poly {
    p.scale(c)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            }
            first = false;
            let unit = mag.is_one() && i > 0;
            if !unit {
                if mag.is_integer() || i == 0 {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}
