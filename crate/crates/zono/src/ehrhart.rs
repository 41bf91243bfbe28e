//! Ehrhart polynomials, lattice point counts, `h*` and `h*_r`.

use lace_poly::{std_to_binomial_basis, series_numerator, Poly, Rational};
use lace_roots::{is_real_rooted, Certificate, Verdict};
use lace_subdiv::{colored_d, edgewise_u, Certifier, ColoredPTable, Variant};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Result, ZonoError};
use crate::linalg::{cofactor_normal, integer_nullspace, minor_gcd, rank, subsets};
use crate::zonotope::Zonotope;

/// Largest bounding box, in lattice points, that brute-force counting scans.
pub const BOX_LIMIT: u128 = 1_000_000;

/// `ι(Z; x) = Σ_S g(S) x^{|S|}` over linearly independent sets of generators,
/// `g(S)` the gcd of the maximal minors of `S`.
pub fn ehrhart_polynomial(z: &Zonotope) -> Poly {
    let gens: Vec<&[i64]> =
        z.generators().iter().filter(|g| g.iter().any(|&x| x != 0)).map(Vec::as_slice).collect();
    assert!(gens.len() < 32, "too many generators for subset enumeration");
    let n = z.dim();
    let ambient = z.ambient_dim();
    let terms: Vec<(usize, BigInt)> = (0u32..1 << gens.len())
        .into_par_iter()
        .filter(|mask| mask.count_ones() as usize <= n)
        .filter_map(|mask| {
            let cols: Vec<&[i64]> =
                (0..gens.len()).filter(|i| mask >> i & 1 == 1).map(|i| gens[i]).collect();
            let g = minor_gcd(&cols, ambient);
            (!g.is_zero()).then(|| (cols.len(), g))
        })
        .collect();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (k, g) in terms {
        coeffs[k] += g;
    }
    Poly::new(coeffs.into_iter().map(Rational::from_integer).collect())
}

/// Halfspace description of `Z - t` inside its linear span.
struct Membership {
    n: usize,
    span_equations: Vec<Vec<i64>>,
    coords: Vec<usize>,
    /// Normal `u` with `min_{z in Z-t} u·z` and `max`.
    facets: Vec<(Vec<i64>, i64, i64)>,
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Membership {
    fn new(z: &Zonotope) -> Self {
        let ambient = z.ambient_dim();
        let gens: Vec<Vec<i64>> =
            z.generators().iter().filter(|g| g.iter().any(|&x| x != 0)).cloned().collect();
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        let mut basis: Vec<Vec<i64>> = Vec::new();
        for g in &gens {
            let mut trial: Vec<Vec<BigInt>> = basis.iter().map(|b| big(b)).collect();
            trial.push(big(g));
            if rank(&trial) == trial.len() {
                basis.push(g.clone());
            }
        }
        let n = basis.len();
        let span_equations = integer_nullspace(&basis, ambient);
        // A coordinate projection that is injective on the span.
        let coords = subsets(ambient, n)
            .into_iter()
            .find(|rows| {
                let cols: Vec<Vec<i64>> = basis.iter().map(|b| rows.iter().map(|&i| b[i]).collect()).collect();
                let cols: Vec<&[i64]> = cols.iter().map(Vec::as_slice).collect();
                !minor_gcd(&cols, n).is_zero()
            })
            .expect("a basis has a nonzero maximal minor");
        let projected: Vec<Vec<i64>> = gens.iter().map(|g| coords.iter().map(|&i| g[i]).collect()).collect();
        let mut facets: Vec<(Vec<i64>, i64, i64)> = Vec::new();
        if n >= 1 {
            for s in subsets(projected.len(), n - 1) {
                let vs: Vec<&[i64]> = s.iter().map(|&i| projected[i].as_slice()).collect();
                let mut u = cofactor_normal(&vs, n);
                let g = u.iter().fold(0i64, |acc, &x| acc.gcd(&x));
                if g == 0 {
                    continue;
                }
                let lead = *u.iter().find(|&&x| x != 0).unwrap();
                let sign = if lead < 0 { -1 } else { 1 };
                u.iter_mut().for_each(|x| *x = *x / g * sign);
                if facets.iter().any(|f| f.0 == u) {
                    continue;
                }
                let (lo, hi) = projected.iter().fold((0, 0), |(lo, hi), p| {
                    let d = dot(&u, p);
                    (lo + d.min(0), hi + d.max(0))
                });
                facets.push((u, lo, hi));
            }
        }
        Membership { n, span_equations, coords, facets }
    }

    /// Is `y` (already shifted by `-m t`) in `m (Z - t)`, or in its relative
    /// interior when `interior` is set?
    fn contains(&self, y: &[i64], m: i64, interior: bool) -> bool {
        if self.span_equations.iter().any(|w| dot(w, y) != 0) {
            return false;
        }
        let p: Vec<i64> = self.coords.iter().map(|&i| y[i]).collect();
        self.facets.iter().all(|(u, lo, hi)| {
            let v = dot(u, &p);
            if interior && self.n >= 1 {
                m * lo < v && v < m * hi
            } else {
                m * lo <= v && v <= m * hi
            }
        })
    }
}

fn scan(z: &Zonotope, m: u32, interior: bool) -> Result<u64> {
    let m = m as i64;
    let ambient = z.ambient_dim();
    let mut lo = vec![0i64; ambient];
    let mut hi = vec![0i64; ambient];
    for g in z.generators() {
        for j in 0..ambient {
            lo[j] += m * g[j].min(0);
            hi[j] += m * g[j].max(0);
        }
    }
    let points: u128 = lo.iter().zip(&hi).map(|(l, h)| (h - l + 1) as u128).product();
    if points > BOX_LIMIT {
        return Err(ZonoError::TooLarge { points, limit: BOX_LIMIT });
    }
    let mem = Membership::new(z);
    let mut y = lo.clone();
    let mut count = 0;
    loop {
        if mem.contains(&y, m, interior) {
            count += 1;
        }
        let mut j = 0;
        loop {
            if j == ambient {
                return Ok(count);
            }
            y[j] += 1;
            if y[j] <= hi[j] {
                break;
            }
            y[j] = lo[j];
            j += 1;
        }
    }
}

/// `#(mZ ∩ Z^N)` by scanning the bounding box.
pub fn count_lattice_points(z: &Zonotope, m: u32) -> Result<u64> {
    scan(z, m, false)
}

/// Lattice points in the relative interior of `mZ`; a point is its own
/// relative interior.
pub fn count_interior_points(z: &Zonotope, m: u32) -> Result<u64> {
    scan(z, m, true)
}

/// `(-1)^n ι(Z; -1) >= 1`.
pub fn interior_point_exists(z: &Zonotope) -> bool {
    let n = z.dim();
    let v = ehrhart_polynomial(z).eval(&Rational::from_integer((-1).into()));
    let v = if n % 2 == 0 { v } else { -v };
    v >= Rational::from_integer(1.into())
}

fn iota_at(iota: &Poly, m: usize) -> Rational {
    iota.eval(&Rational::from_integer((m as i64).into()))
}

/// `h*(Z)`, the numerator of `Σ ι(Z; m) x^m` over `(1-x)^{n+1}`.
pub fn hstar(z: &Zonotope) -> Result<Poly> {
    let n = z.dim();
    let iota = ehrhart_polynomial(z);
    let values: Vec<Rational> = (0..=n).map(|m| iota_at(&iota, m)).collect();
    Ok(series_numerator(&values, n)?)
}

/// Coordinates `c` of `ι(Z; x) = Σ c_i x^i (1+x)^{n-i}`.
pub fn binomial_coordinates(z: &Zonotope) -> Result<Vec<Rational>> {
    Ok(std_to_binomial_basis(&ehrhart_polynomial(z), z.dim())?)
}

/// `h*_r(Z)` from `1 + Σ_{m>=1} (ι(rm) - ι(rm-1)) x^m = h*_r / (1-x)^n`,
/// required to equal `U^n_r(h*)` and `D_{n,r}(c)`.
pub fn hstar_r(z: &Zonotope, r: usize) -> Result<Poly> {
    let n = z.dim();
    let iota = ehrhart_polynomial(z);
    let mut s = vec![iota_at(&iota, 0)];
    s.extend((1..=n).map(|m| iota_at(&iota, r * m) - iota_at(&iota, r * m - 1)));
    let full = &Poly::new(s) * &Poly::one_minus_x_pow(n);
    let series = Poly::new(full.padded(n));
    let via_u = edgewise_u(n, r, &hstar(z)?)?;
    let via_d = colored_d(n, r, &Poly::new(std_to_binomial_basis(&iota, n)?))?;
    if series != via_u || series != via_d {
        return Err(ZonoError::PathMismatch(format!(
            "h*_r: series {series}, U^n_r(h*) {via_u}, D_(n,r)(c) {via_d}"
        )));
    }
    Ok(series)
}

/// (a) `h*_r` real-rooted; (b) with a relative interior lattice point, a
/// nonnegative real-rooted symmetric decomposition of `h*_r` with respect to
/// `n`, obtained as `D_{F_r,n}(c)`. Also verifies that `c` is a nonnegative
/// integer vector and, in case (b), the partial-sum inequalities on `c`.
pub fn certify_zonotope(z: &Zonotope, r: usize) -> Result<Certificate> {
    let n = z.dim();
    let h = hstar_r(z, r)?;
    let c = binomial_coordinates(z)?;
    let mut cert = Certificate::new(format!("zonotope n={n} r={r}: h*_r = {h}"), Verdict::Certified);
    cert.push_hypothesis("c nonnegative integers", c.iter().all(|x| x.is_integer() && !x.is_negative()));
    let a = is_real_rooted(&h);
    cert.push_hypothesis("(a) h*_r real-rooted", a.holds());
    let mut a = a;
    a.subject = format!("(a) {}", a.subject);
    cert.parts.push(a);
    let interior = interior_point_exists(z);
    cert.push_hypothesis(format!("relative interior lattice point: {interior}"), true);
    if interior {
        let table = ColoredPTable::build(n, r)?.p_rows()?;
        let c_poly = Poly::new(c);
        let image = table.apply_df(n, &c_poly)?;
        if image != h {
            return Err(ZonoError::PathMismatch(format!("D_(F_r,n)(c) = {image} but h*_r = {h}")));
        }
        let mut b = Certifier::new(table).main_theorem(n, &c_poly, Variant::A)?;
        for name in (0..=n / 2).map(|i| format!("c-ineq1@i={i}")) {
            cert.push_hypothesis(name.clone(), b.hypothesis(&name).unwrap_or(false));
        }
        let holds = matches!(b.verdict, Verdict::NonnegSymDecomp | Verdict::InterlacingSymDecomp);
        cert.push_hypothesis("(b) nonnegative real-rooted symmetric decomposition", holds);
        b.subject = format!("(b) {}", b.subject);
        cert.parts.push(b);
    }
    if !cert.all_hypotheses_hold() {
        cert.verdict = Verdict::NotCertified;
    }
    Ok(cert)
}
