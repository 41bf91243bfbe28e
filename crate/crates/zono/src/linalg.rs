//! Exact integer linear algebra on small dense matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Fraction-free (Bareiss) elimination in place; returns the rank. For a
/// square matrix of full rank the last pivot is the determinant up to the
/// sign of the row swaps, which is returned alongside.
fn bareiss(m: &mut [Vec<BigInt>]) -> (usize, BigInt) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| !m[r][c].is_zero()) else { continue };
        if p != rank {
            m.swap(p, rank);
            sign = -sign;
        }
        for r in rank + 1..rows {
            for k in c + 1..cols {
                let v = (&m[rank][c] * &m[r][k] - &m[r][c] * &m[rank][k]) / &prev;
                m[r][k] = v;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    (rank, sign * prev)
}

pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    bareiss(&mut rows.to_vec()).0
}

pub fn determinant(square: &[Vec<BigInt>]) -> BigInt {
    if square.is_empty() {
        return BigInt::one();
    }
    let (rank, det) = bareiss(&mut square.to_vec());
    if rank < square.len() { BigInt::zero() } else { det }
}

/// Subsets of `0..n` of size `k`, lexicographic.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// gcd of the maximal minors of the `N x k` matrix with the given columns;
/// zero iff the columns are dependent. The empty set gives 1.
pub fn minor_gcd(columns: &[&[i64]], ambient: usize) -> BigInt {
    let k = columns.len();
    if k == 0 {
        return BigInt::one();
    }
    let mut g = BigInt::zero();
    for rows in subsets(ambient, k) {
        let square: Vec<Vec<BigInt>> =
            rows.iter().map(|&i| columns.iter().map(|c| BigInt::from(c[i])).collect()).collect();
        g = g.gcd(&determinant(&square));
        if g.is_one() {
            break;
        }
    }
    g
}

/// Integer basis of `{w : w · v = 0 for every row v}`.
pub fn integer_nullspace(rows: &[Vec<i64>], ambient: usize) -> Vec<Vec<i64>> {
    use lace_poly::Rational as BigRational;
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for c in 0..ambient {
        let Some(p) = (row..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(p, row);
        let inv = m[row][c].recip();
        for k in 0..ambient {
            m[row][k] = &m[row][k] * &inv;
        }
        for r in 0..m.len() {
            if r != row && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for k in 0..ambient {
                    let v = &m[row][k] * &f;
                    m[r][k] -= v;
                }
            }
        }
        pivots.push(c);
        row += 1;
    }
    let free: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut w = vec![BigRational::zero(); ambient];
            w[f] = BigRational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                w[pc] = -m[r][f].clone();
            }
            let lcm = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            w.iter()
                .map(|x| {
                    let v = x * BigRational::from_integer(lcm.clone());
                    i64::try_from(v.to_integer()).expect("nullspace entry fits in i64")
                })
                .collect()
        })
        .collect()
}

/// Generalized cross product of `n - 1` vectors in `Z^n`: entry `i` is
/// `(-1)^i` times the minor with row `i` deleted.
pub fn cofactor_normal(vectors: &[&[i64]], n: usize) -> Vec<i64> {
    (0..n)
        .map(|i| {
            let square: Vec<Vec<BigInt>> = (0..n)
                .filter(|&r| r != i)
                .map(|r| vectors.iter().map(|v| BigInt::from(v[r])).collect())
                .collect();
            let d = i64::try_from(determinant(&square)).expect("cofactor fits in i64");
            if i % 2 == 0 { d } else { -d }
        })
        .collect()
}
