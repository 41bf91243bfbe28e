//! Face-count triangles of uniform subdivisions, read off constructions on simplices.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::construct::Construction;
use crate::error::{ComplexError, Result};

fn binom(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Rows `0..=d`: row `j` is the f-vector `(f_{-1}, …, f_{j-1})` of the
/// construction applied to `σ_j`. Afterwards the construction on `σ_d` is
/// checked for uniformity: for every face `G` of `σ_d`, the number of faces
/// whose carrier is exactly `G` must depend only on `|G|`, and agree with the
/// interior counts implied by the rows.
pub fn extract_rows(construction: Construction, d: usize) -> Result<Vec<Vec<u64>>> {
    if d > 20 {
        return Err(ComplexError::Precondition(format!("size {d} is too large to construct")));
    }
    let rows: Vec<Vec<u64>> =
        (0..=d).map(|j| construction.apply(&SimplicialComplex::simplex(j)).complex.f_vector()).collect();
    check_uniformity(construction, d, &rows)?;
    Ok(rows)
}

fn check_uniformity(construction: Construction, d: usize, rows: &[Vec<u64>]) -> Result<()> {
    let sub = construction.apply(&SimplicialComplex::simplex(d));
    let mut counts: HashMap<(usize, u64), i128> = HashMap::new();
    let masks: Vec<u64> = sub
        .carriers
        .iter()
        .map(|c| c.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    sub.complex.for_each_face(|face| {
        let mask = face.iter().fold(0u64, |m, &v| m | masks[v as usize]);
        *counts.entry((face.len(), mask)).or_default() += 1;
    });
    for j in 0..=d {
        for i in 0..=j {
            // Interior faces of σ_j by inclusion–exclusion over its faces.
            let interior: i128 = (0..=j)
                .map(|m| {
                    let f = rows[m].get(i).copied().unwrap_or(0) as i128;
                    let sign = if (j - m) % 2 == 0 { 1 } else { -1 };
                    sign * binom(j, m) * f
                })
                .sum();
            for mask in (0u64..1 << d).filter(|m| m.count_ones() as usize == j) {
                let got = counts.get(&(i, mask)).copied().unwrap_or(0);
                if got != interior {
                    return Err(ComplexError::UniformityViolation(format!(
                        "{construction:?}: carrier {mask:#b} has {got} interior faces of size {i}, expected {interior}"
                    )));
                }
            }
        }
    }
    Ok(())
}
