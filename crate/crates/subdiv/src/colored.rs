//! The polynomials `p^⟨r,j⟩_{n,k} = S^r_j((1 + x + … + x^{r-1})^n p_{n,k})`
//! for the r-colored barycentric subdivision.

use lace_poly::Poly;
use serde::Serialize;

use crate::engine::PRowTable;
use crate::error::{Result, SubdivError};
use crate::operators::barycentric_table;

/// `rows[m][j][k] = p^⟨r,j⟩_{m,k}` for `m <= n`, `j < r`, `k <= m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ColoredPTable {
    r: usize,
    rows: Vec<Vec<Vec<Poly>>>,
}

/// Directly from the definition.
fn by_definition(n: usize, r: usize) -> Result<Vec<Vec<Vec<Poly>>>> {
    let bary = barycentric_table(n);
    let ones = Poly::ones(r);
    let mut power = Poly::one();
    let mut rows = Vec::with_capacity(n + 1);
    for m in 0..=n {
        if m > 0 {
            power = &power * &ones;
        }
        let lifted: Vec<Poly> = bary.row(m).iter().map(|p| &power * p).collect();
        let mut level = Vec::with_capacity(r);
        for j in 0..r {
            level.push(lifted.iter().map(|q| q.veronese(r, j)).collect::<lace_poly::Result<Vec<_>>>()?);
        }
        rows.push(level);
    }
    Ok(rows)
}

/// By the recurrence
/// `p^⟨j⟩_{m,k} = x Σ_{ℓ>j} R_ℓ + x Σ_{i<k} p^⟨j⟩_{m-1,i} + Σ_{i>=k} p^⟨j⟩_{m-1,i} + Σ_{ℓ<j} R_ℓ`
/// with `R_ℓ = Σ_i p^⟨ℓ⟩_{m-1,i}`, from `p^⟨j⟩_{0,0} = [j = 0]`.
fn by_recurrence(n: usize, r: usize) -> Vec<Vec<Vec<Poly>>> {
    let base: Vec<Vec<Poly>> =
        (0..r).map(|j| vec![if j == 0 { Poly::one() } else { Poly::zero() }]).collect();
    let mut rows = vec![base];
    for m in 1..=n {
        let prev = &rows[m - 1];
        let sums: Vec<Poly> = prev.iter().map(|row| row.iter().sum()).collect();
        let mut level = Vec::with_capacity(r);
        for j in 0..r {
            let above: Poly = sums[j + 1..].iter().sum();
            let below: Poly = sums[..j].iter().sum();
            let outer = &above.shift(1) + &below;
            let mut head = Poly::zero();
            let mut tail = sums[j].clone();
            let mut row = Vec::with_capacity(m + 1);
            for k in 0..=m {
                if k > 0 {
                    head = &head + &prev[j][k - 1];
                    tail = &tail - &prev[j][k - 1];
                }
                row.push(&(&outer + &head.shift(1)) + &tail);
            }
            level.push(row);
        }
        rows.push(level);
    }
    rows
}

impl ColoredPTable {
    /// Builds the table both ways and requires entrywise agreement.
    pub fn build(n: usize, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(SubdivError::Precondition("r must be at least 1".into()));
        }
        let a = by_definition(n, r)?;
        let b = by_recurrence(n, r);
        for (m, (la, lb)) in a.iter().zip(&b).enumerate() {
            for (j, (ra, rb)) in la.iter().zip(lb).enumerate() {
                for (k, (pa, pb)) in ra.iter().zip(rb).enumerate() {
                    if pa != pb {
                        return Err(SubdivError::PathMismatch(format!(
                            "p^<{r},{j}>_({m},{k}): definition {pa} vs recurrence {pb}"
                        )));
                    }
                }
            }
        }
        Ok(ColoredPTable { r, rows: a })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn size(&self) -> usize {
        self.rows.len() - 1
    }

    /// `p^⟨r,j⟩_{n,k}`.
    pub fn get(&self, n: usize, j: usize, k: usize) -> &Poly {
        &self.rows[n][j][k]
    }

    /// `(p^⟨r,j⟩_{n,0}, …, p^⟨r,j⟩_{n,n})`.
    pub fn row(&self, n: usize, j: usize) -> &[Poly] {
        &self.rows[n][j]
    }

    /// `θ_{F_r}(σ_n, x) = x Σ_{j>=1} Σ_{k<n} p^⟨r,j⟩_{n-1,k}`.
    pub fn theta(&self, n: usize) -> Poly {
        assert!(n >= 1 && n <= self.size() + 1);
        let s: Poly = self.rows[n - 1][1..].iter().flatten().sum();
        s.shift(1)
    }

    /// The concatenation `(P^⟨r,r-1⟩_n, …, P^⟨r,1⟩_n, P^⟨r,0⟩_n)`.
    pub fn concatenated(&self, n: usize) -> Vec<Poly> {
        self.rows[n].iter().rev().flatten().cloned().collect()
    }

    /// The p-row table of `F_r`: `p_{F_r,n,k} = p^⟨r,0⟩_{n,k}` with `θ` as above.
    pub fn p_rows(&self) -> Result<PRowTable> {
        let rows = self.rows.iter().map(|level| level[0].clone()).collect();
        let mut thetas = vec![Poly::zero()];
        thetas.extend((1..=self.size()).map(|m| self.theta(m)));
        PRowTable::from_parts(rows, thetas)
    }
}

pub fn colored_p_table(n: usize, r: usize) -> Result<ColoredPTable> {
    ColoredPTable::build(n, r)
}

/// `θ_{F_r}(σ_n, x)`.
pub fn colored_theta(n: usize, r: usize) -> Result<Poly> {
    if n == 0 {
        return Err(SubdivError::Precondition("θ is defined for n >= 1".into()));
    }
    Ok(ColoredPTable::build(n - 1, r)?.theta(n))
}
