//! Sturm chains, square-free factorization and bisection root isolation.

use lace_poly::{rat, BigInt, Poly, Rational};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::approx::certified_isolation;
use crate::cert::RootInterval;
use crate::error::{Result, RootError};

pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 20)
}

/// Sign of `c(x)` for integer coefficients `c`, evaluated without fractions.
pub(crate) fn sign_at(c: &[BigInt], x: &Rational) -> i8 {
    if c.is_empty() {
        return 0;
    }
    let (a, b) = (x.numer(), x.denom());
    let d = c.len() - 1;
    // sum_i c_i a^i b^(d-i), with b > 0.
    let mut acc = c[d].clone();
    let mut bpow = BigInt::one();
    for i in (0..d).rev() {
        bpow *= b;
        acc = acc * a + &c[i] * &bpow;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// Sturm chain of a nonzero polynomial, each member scaled to a primitive
/// integer polynomial by a positive factor.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Self {
        let mut polys = vec![p.primitive()];
        let mut next = p.derivative().primitive();
        while !next.is_zero() {
            let r = polys.last().unwrap().div_rem(&next).1;
            polys.push(next);
            next = (-&r).primitive();
        }
        SturmChain { chain: polys.iter().map(Poly::integer_multiple).collect() }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    pub fn variations(&self, x: &Rational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for c in &self.chain {
            let s = sign_at(c, x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }

    fn base(&self) -> &[BigInt] {
        &self.chain[0]
    }
}

/// Number of distinct real roots in `(lo, hi]`. Endpoints must not be roots.
pub fn sturm_root_count(p: &Poly, lo: &Rational, hi: &Rational) -> Result<usize> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    if lo >= hi {
        return Err(RootError::EmptyInterval);
    }
    if p.eval(lo).is_zero() || p.eval(hi).is_zero() {
        return Err(RootError::EndpointIsRoot);
    }
    let s = SturmChain::new(p);
    Ok(s.variations(lo) - s.variations(hi))
}

/// Yun's square-free factorization: `(f_i, i)` with `p = c · prod f_i^i`,
/// each `f_i` square-free, monic and nonconstant.
pub fn square_free_factors(p: &Poly) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let dp = p.derivative();
    let a0 = p.gcd(&dp);
    let mut b = p.div_rem(&a0).0;
    let c = dp.div_rem(&a0).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree().unwrap_or(0) > 0 {
        let a = b.gcd(&d);
        if a.degree().unwrap_or(0) > 0 {
            out.push((a.monic(), i));
        }
        b = b.div_rem(&a).0;
        let c = d.div_rem(&a).0;
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

pub fn square_free_part(p: &Poly) -> Poly {
    if p.is_zero() {
        return Poly::zero();
    }
    let g = p.gcd(&p.derivative());
    p.div_rem(&g).0.monic()
}

/// `1 + max |a_i / a_d|`, rounded up to an integer.
pub fn cauchy_bound(p: &Poly) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let m = p.coeffs()[..p.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    (m + Rational::one()).ceil()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingIntervals {
    /// Sorted ascending, pairwise disjoint.
    pub intervals: Vec<RootInterval>,
}

impl IsolatingIntervals {
    pub fn total_multiplicity(&self) -> usize {
        self.intervals.iter().map(|i| i.multiplicity).sum()
    }

    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }
}

/// Square-free part as a primitive integer polynomial, plus its isolating
/// intervals (open, root-free endpoints) sorted ascending. Only real roots
/// are isolated; the count tells whether all roots are real.
pub(crate) struct Isolation {
    pub sqfree: Vec<BigInt>,
    pub sqfree_degree: usize,
    pub intervals: Vec<(Rational, Rational)>,
}

fn midpoint(lo: &Rational, hi: &Rational) -> Rational {
    (lo + hi) / rat(2)
}

/// A point strictly inside `(lo, hi)` that is not a root of `s`.
fn split_point(s: &[BigInt], lo: &Rational, hi: &Rational) -> Rational {
    let w = hi - lo;
    let mut m = midpoint(lo, hi);
    let mut step = &w / rat(4);
    while sign_at(s, &m) == 0 {
        m = lo + &w / rat(2) + &step;
        step /= rat(2);
    }
    m
}

pub(crate) fn isolate_real(p: &Poly) -> Isolation {
    let s = square_free_part(p);
    let sd = s.degree().unwrap_or(0);
    let mut intervals = Vec::new();
    if sd == 0 {
        return Isolation { sqfree: s.primitive().integer_multiple(), sqfree_degree: sd, intervals };
    }
    let b = cauchy_bound(&s);
    let fast = s.primitive().integer_multiple();
    if let Some(iv) = certified_isolation(&fast, &b).filter(|iv| iv.len() == sd) {
        return Isolation { sqfree: fast, sqfree_degree: sd, intervals: iv };
    }
    let chain = SturmChain::new(&s);
    let sq = chain.base().to_vec();
    {
        let lo = -b.clone();
        let vlo = chain.variations(&lo);
        let vhi = chain.variations(&b);
        let mut stack = vec![(lo, vlo, b, vhi)];
        while let Some((lo, vlo, hi, vhi)) = stack.pop() {
            match vlo - vhi {
                0 => {}
                1 => intervals.push((lo, hi)),
                _ => {
                    let m = split_point(&sq, &lo, &hi);
                    let vm = chain.variations(&m);
                    stack.push((lo, vlo, m.clone(), vm));
                    stack.push((m, vm, hi, vhi));
                }
            }
        }
        intervals.sort_by(|a, b| a.0.cmp(&b.0));
    }
    Isolation { sqfree: sq, sqfree_degree: sd, intervals }
}

/// Shrinks `(lo, hi)` around the single simple root of `s` by bisection. A
/// midpoint hitting the root collapses the interval to that exact point.
fn bisect_once(s: &[BigInt], lo: &mut Rational, hi: &mut Rational) {
    if lo == hi {
        return;
    }
    let slo = sign_at(s, lo);
    let m = midpoint(lo, hi);
    let sm = sign_at(s, &m);
    if sm == 0 {
        *lo = m.clone();
        *hi = m;
    } else if sm == slo {
        *lo = m;
    } else {
        *hi = m;
    }
}

pub(crate) fn refine(s: &[BigInt], iv: &mut [(Rational, Rational)], width: Option<&Rational>) {
    if let Some(w) = width {
        for (lo, hi) in iv.iter_mut() {
            while &(&*hi - &*lo) > w {
                bisect_once(s, lo, hi);
            }
        }
    }
    // Intervals from the bisection tree may share an endpoint; separate them.
    loop {
        let mut touching = false;
        for k in 1..iv.len() {
            if iv[k - 1].1 >= iv[k].0 {
                touching = true;
                let (left, right) = iv.split_at_mut(k);
                let (a, b) = (&mut left[k - 1], &mut right[0]);
                bisect_once(s, &mut a.0, &mut a.1);
                bisect_once(s, &mut b.0, &mut b.1);
            }
        }
        if !touching {
            break;
        }
    }
}

/// Multiplicity of the root of `p` isolated in `(lo, hi)`, given the square-free
/// factors of `p`; 0 when that root is not a root of `p`.
pub(crate) fn multiplicity_in(
    factors: &[(Vec<BigInt>, usize)],
    lo: &Rational,
    hi: &Rational,
) -> usize {
    for (f, m) in factors {
        let root_here = if lo == hi {
            sign_at(f, lo) == 0
        } else {
            sign_at(f, lo) * sign_at(f, hi) < 0
        };
        if root_here {
            return *m;
        }
    }
    0
}

pub(crate) fn int_factors(p: &Poly) -> Vec<(Vec<BigInt>, usize)> {
    square_free_factors(p)
        .into_iter()
        .map(|(f, m)| (f.integer_multiple(), m))
        .collect()
}

/// Isolates every root of a real-rooted polynomial to width `width`.
pub fn isolate_roots_width(p: &Poly, width: Option<&Rational>) -> Result<IsolatingIntervals> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let iso = isolate_real(p);
    if iso.intervals.len() != iso.sqfree_degree {
        return Err(RootError::NotRealRooted(p.to_string()));
    }
    let mut iv = iso.intervals;
    refine(&iso.sqfree, &mut iv, width);
    let factors = int_factors(p);
    let intervals = iv
        .into_iter()
        .map(|(lo, hi)| {
            let multiplicity = multiplicity_in(&factors, &lo, &hi);
            RootInterval { lo, hi, multiplicity }
        })
        .collect();
    Ok(IsolatingIntervals { intervals })
}

pub fn isolate_roots(p: &Poly) -> Result<IsolatingIntervals> {
    isolate_roots_width(p, Some(&default_width()))
}

/// Re-verifies an isolation by sign evaluation alone: each interval brackets a
/// sign change of the square-free part (or hits an exact root), intervals are
/// disjoint, their number equals the square-free degree, and multiplicities
/// add up to the degree.
pub fn recheck_isolation(p: &Poly, iso: &IsolatingIntervals) -> bool {
    if p.is_zero() {
        return false;
    }
    let s = square_free_part(p).integer_multiple();
    let sd = s.len().saturating_sub(1);
    if iso.intervals.len() != sd || iso.total_multiplicity() != p.degree().unwrap() {
        return false;
    }
    let brackets = iso.intervals.iter().all(|iv| {
        if iv.lo == iv.hi {
            sign_at(&s, &iv.lo) == 0
        } else {
            iv.lo < iv.hi && sign_at(&s, &iv.lo) * sign_at(&s, &iv.hi) < 0
        }
    });
    let disjoint = iso.intervals.windows(2).all(|w| w[0].hi < w[1].lo);
    brackets && disjoint && iso.intervals.iter().all(|iv| iv.multiplicity >= 1)
}
