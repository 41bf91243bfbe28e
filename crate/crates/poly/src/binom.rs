//! Pascal-triangle cache for binomial coefficients.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub const DEFAULT_CACHE_BOUND: usize = 64;

static BOUND: AtomicUsize = AtomicUsize::new(DEFAULT_CACHE_BOUND);
static TABLE: OnceLock<Vec<Vec<BigInt>>> = OnceLock::new();

/// Sets the largest `n` kept in the cached table. Returns `false` when the
/// table was already built, in which case the call has no effect.
pub fn set_binomial_cache_bound(bound: usize) -> bool {
    if TABLE.get().is_some() {
        return false;
    }
    BOUND.store(bound, Ordering::SeqCst);
    true
}

pub fn binomial_cache_bound() -> usize {
    TABLE.get().map_or_else(|| BOUND.load(Ordering::SeqCst), |t| t.len() - 1)
}

fn table() -> &'static [Vec<BigInt>] {
    TABLE.get_or_init(|| {
        let bound = BOUND.load(Ordering::SeqCst);
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(bound + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=bound {
            let prev = &rows[n - 1];
            let mut row = Vec::with_capacity(n + 1);
            row.push(BigInt::one());
            for k in 1..n {
                row.push(&prev[k - 1] + &prev[k]);
            }
            row.push(BigInt::one());
            rows.push(row);
        }
        rows
    })
}

/// C(n, k), zero when k > n.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let t = table();
    if n < t.len() {
        return t[n][k].clone();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}
