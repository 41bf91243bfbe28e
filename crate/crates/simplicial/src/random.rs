use rand::seq::index::sample;
use rand::Rng;

use crate::complex::{SimplicialComplex, Vertex};

/// `count` facets of `size` vertices drawn uniformly from `0..pool`,
/// deduplicated.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, pool: usize, count: usize, size: usize) -> SimplicialComplex {
    assert!(size <= pool, "facet size exceeds vertex pool");
    let facets = (0..count)
        .map(|_| sample(rng, pool, size).into_iter().map(|v| v as Vertex).collect())
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// Like [`random_complex`] but each facet size is uniform in `1..=max_size`;
/// dominated facets are dropped, so the result need not be pure.
pub fn random_mixed_complex<R: Rng + ?Sized>(
    rng: &mut R,
    pool: usize,
    count: usize,
    max_size: usize,
) -> SimplicialComplex {
    let facets = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=max_size.min(pool));
            sample(rng, pool, size).into_iter().map(|v| v as Vertex).collect()
        })
        .collect();
    SimplicialComplex::from_facets(facets)
}
