use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use lace_poly::{binomial, f_to_h, BigInt, Poly, Rational};
use lace_simplicial::{extract_rows, Construction};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Result, SubdivError};

/// Triangular array `f(i, j)`, `0 <= i <= j <= d`: the number of faces with
/// `i` vertices (dimension `i - 1`, the empty face included) of a uniform
/// triangulation restricted to a `(j-1)`-dimensional face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTriangle {
    rows: Vec<Vec<u64>>,
}

fn binom_i(n: usize, k: usize) -> i128 {
    binomial(n, k).to_i128().expect("binomial fits in i128")
}

impl FTriangle {
    /// Validates shape and the conventions `f(0, j) = 1`, `f(j, j) >= 1`.
    pub fn new(rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(SubdivError::Parse("no rows".into()));
        }
        for (j, row) in rows.iter().enumerate() {
            if row.len() != j + 1 {
                return Err(SubdivError::Parse(format!("row {j} has {} entries, expected {}", row.len(), j + 1)));
            }
            if row[0] != 1 {
                return Err(SubdivError::Parse(format!("row {j}: f(0,{j}) must be 1")));
            }
            if row[j] == 0 {
                return Err(SubdivError::Parse(format!("row {j}: f({j},{j}) must be positive")));
            }
        }
        Ok(FTriangle { rows })
    }

    /// The identity triangulation: `f(i, j) = C(j, i)`.
    pub fn trivial(d: usize) -> Self {
        let rows = (0..=d)
            .map(|j| (0..=j).map(|i| binomial(j, i).to_u64().unwrap()).collect())
            .collect();
        FTriangle { rows }
    }

    /// Barycentric subdivision: `f(i, j) = sum_m C(j, m) i! S(m, i)`, chains of
    /// `i` nonempty faces counted by the largest face.
    pub fn barycentric(d: usize) -> Self {
        let mut stirling = vec![vec![0u64; d + 1]; d + 1];
        stirling[0][0] = 1;
        for m in 1..=d {
            for i in 1..=m {
                stirling[m][i] = i as u64 * stirling[m - 1][i] + stirling[m - 1][i - 1];
            }
        }
        let fact = |i: usize| (1..=i as u64).product::<u64>();
        let rows = (0..=d)
            .map(|j| {
                (0..=j)
                    .map(|i| {
                        (i..=j)
                            .map(|m| binomial(j, m).to_u64().unwrap() * fact(i) * stirling[m][i])
                            .sum()
                    })
                    .collect()
            })
            .collect();
        FTriangle { rows }
    }

    /// Face counts of a literal construction on `σ_0, …, σ_d`.
    pub fn from_construction(c: Construction, d: usize) -> Result<Self> {
        FTriangle::new(extract_rows(c, d)?)
    }

    pub fn edgewise(r: usize, d: usize) -> Result<Self> {
        Self::from_construction(Construction::Edgewise(r), d)
    }

    pub fn colored(r: usize, d: usize) -> Result<Self> {
        Self::from_construction(Construction::Colored(r), d)
    }

    /// Memoized [`FTriangle::from_construction`].
    pub fn cached(c: Construction, d: usize) -> Result<Arc<Self>> {
        static CACHE: OnceLock<Mutex<HashMap<(Construction, usize), Arc<FTriangle>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(t) = cache.lock().unwrap().get(&(c, d)) {
            return Ok(t.clone());
        }
        let t = Arc::new(match c {
            Construction::Identity => FTriangle::trivial(d),
            Construction::Barycentric => FTriangle::barycentric(d),
            _ => FTriangle::from_construction(c, d)?,
        });
        cache.lock().unwrap().insert((c, d), t.clone());
        Ok(t)
    }

    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.rows[j][i]
    }

    fn check(&self, n: usize) -> Result<()> {
        if n > self.size() {
            return Err(SubdivError::OutOfRange { n, d: self.size() });
        }
        Ok(())
    }

    /// `h_F(σ_n, x)`.
    pub fn h_simplex(&self, n: usize) -> Result<Poly> {
        self.check(n)?;
        Ok(f_to_h(&self.rows[n], n)?)
    }

    /// `f°(k, n) = sum_m (-1)^{n-m} C(n, m) f(k, m)`: faces with `k` vertices
    /// interior to `σ_n`.
    pub fn interior_f(&self, k: usize, n: usize) -> i128 {
        (k..=n)
            .map(|m| {
                let t = binom_i(n, m) * self.get(k, m) as i128;
                if (n - m) % 2 == 0 { t } else { -t }
            })
            .sum()
    }

    /// `h_F(∂σ_n, x)` from the face counts of the subdivided boundary.
    pub fn h_boundary(&self, n: usize) -> Result<Poly> {
        self.check(n)?;
        if n == 0 {
            return Err(SubdivError::Precondition("∂σ_0 is void".into()));
        }
        let fvec: Vec<BigInt> = (0..n)
            .map(|k| {
                let c: i128 = (k..n).map(|m| binom_i(n, m) * self.interior_f(k, m)).sum();
                BigInt::from(c)
            })
            .collect();
        Ok(f_to_h(&fvec, n - 1)?)
    }

    /// `E_F(x^n) = sum_k f°(k, n) x^k`, extended linearly.
    pub fn apply_ef(&self, f: &Poly) -> Result<Poly> {
        if let Some(deg) = f.degree() {
            self.check(deg)?;
        }
        let mut out = Poly::zero();
        for (n, c) in f.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = Poly::new((0..=n).map(|k| Rational::from_integer(self.interior_f(k, n).into())).collect());
            out = &out + &e.scale(c);
        }
        Ok(out)
    }

    /// All interior counts `f°(k, n)` are nonnegative.
    pub fn interior_nonnegative(&self) -> bool {
        (0..=self.size()).all(|n| (0..=n).all(|k| self.interior_f(k, n) >= 0))
    }
}

impl fmt::Display for FTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ftriangle d={}", self.size())?;
        for (j, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(u64::to_string).collect();
            writeln!(f, "{j}: {}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl FromStr for FTriangle {
    type Err = SubdivError;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .map(|l| l.split('#').next().unwrap().trim())
            .filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| SubdivError::Parse("empty input".into()))?;
        let d: usize = header
            .strip_prefix("ftriangle")
            .and_then(|r| r.trim().strip_prefix("d="))
            .and_then(|r| r.trim().parse().ok())
            .ok_or_else(|| SubdivError::Parse(format!("bad header `{header}`")))?;
        let mut rows = Vec::new();
        for line in lines {
            let (j, rest) = line
                .split_once(':')
                .ok_or_else(|| SubdivError::Parse(format!("missing `j:` in `{line}`")))?;
            let j: usize = j.trim().parse().map_err(|_| SubdivError::Parse(format!("bad row index `{j}`")))?;
            if j != rows.len() {
                return Err(SubdivError::Parse(format!("row {j} out of order")));
            }
            let row = rest
                .split_whitespace()
                .map(|t| t.parse::<u64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| SubdivError::Parse(format!("row {j}: {e}")))?;
            rows.push(row);
        }
        if rows.len() != d + 1 {
            return Err(SubdivError::Parse(format!("header says d={d} but {} rows follow", rows.len())));
        }
        FTriangle::new(rows)
    }
}
