use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use lace_poly::{f_to_h, Poly};

use crate::cliques::{maximal_cliques, BitSet};
use crate::error::{ComplexError, Result};

pub type Vertex = u32;

/// A finite abstract simplicial complex given by its facets.
///
/// Facets are sorted, deduplicated and inclusion-maximal. The complex `{∅}`
/// has the single facet `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Vec<Vertex>,
    facets: Vec<Vec<Vertex>>,
}

impl SimplicialComplex {
    /// Normalizes arbitrary generating sets: sorts, dedups and drops faces
    /// contained in another generator.
    pub fn from_facets(facets: Vec<Vec<Vertex>>) -> Self {
        let mut fs: Vec<Vec<Vertex>> = facets
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        fs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        fs.dedup();
        let mut kept: Vec<Vec<Vertex>> = Vec::new();
        for f in fs {
            if !kept.iter().any(|g| g.len() > f.len() && is_subset(&f, g)) {
                kept.push(f);
            }
        }
        Self::from_maximal_facets(kept)
    }

    /// Trusts that no generator contains another; only sorts.
    pub(crate) fn from_maximal_facets(mut facets: Vec<Vec<Vertex>>) -> Self {
        for f in &mut facets {
            f.sort_unstable();
        }
        facets.sort();
        facets.dedup();
        if facets.is_empty() {
            facets.push(Vec::new());
        }
        let mut vertices: Vec<Vertex> = facets.iter().flatten().copied().collect();
        vertices.sort_unstable();
        vertices.dedup();
        SimplicialComplex { vertices, facets }
    }

    /// The full simplex `σ_n` on vertices `0..n`.
    pub fn simplex(n: usize) -> Self {
        Self::from_maximal_facets(vec![(0..n as Vertex).collect()])
    }

    /// `∂σ_n`: all proper subsets of `0..n`.
    pub fn simplex_boundary(n: usize) -> Self {
        if n == 0 {
            return Self::from_maximal_facets(vec![]);
        }
        let facets = (0..n as Vertex)
            .map(|skip| (0..n as Vertex).filter(|&v| v != skip).collect())
            .collect();
        Self::from_maximal_facets(facets)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Vec<Vertex>] {
        &self.facets
    }

    /// Dimension, `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// `n = dim + 1`, the number of vertices of a top-dimensional face.
    pub fn rank(&self) -> usize {
        (self.dim() + 1) as usize
    }

    pub fn is_pure(&self) -> bool {
        let n = self.rank();
        self.facets.iter().all(|f| f.len() == n)
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        self.facets.iter().any(|f| is_subset(face, f))
    }

    /// Calls `visit` once for each face, the empty face included.
    pub fn for_each_face(&self, mut visit: impl FnMut(&[Vertex])) {
        let index: HashMap<Vertex, u128> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i as u128 + 1)).collect();
        let bits = (u128::BITS - (self.vertices.len() as u128).leading_zeros()).max(1) as usize;
        let packable = bits * self.rank() <= 128;
        let mut packed: HashSet<u128> = HashSet::new();
        let mut loose: HashSet<Vec<Vertex>> = HashSet::new();
        let mut face = Vec::with_capacity(self.rank());
        for f in &self.facets {
            assert!(f.len() < 32, "facet too large for subset enumeration");
            for mask in 0u32..(1 << f.len()) {
                face.clear();
                face.extend((0..f.len()).filter(|i| mask >> i & 1 == 1).map(|i| f[i]));
                let fresh = if packable {
                    let key = face.iter().fold(0u128, |k, v| k << bits | index[v]);
                    packed.insert(key)
                } else {
                    loose.insert(face.clone())
                };
                if fresh {
                    visit(&face);
                }
            }
        }
    }

    pub fn faces(&self) -> Vec<Vec<Vertex>> {
        let mut out = Vec::new();
        self.for_each_face(|f| out.push(f.to_vec()));
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// `(f_{-1}, f_0, ..., f_{dim})`.
    pub fn f_vector(&self) -> Vec<u64> {
        let mut f = vec![0u64; self.rank() + 1];
        self.for_each_face(|face| f[face.len()] += 1);
        f
    }

    pub fn h_polynomial(&self) -> Poly {
        f_to_h(&self.f_vector(), self.rank()).expect("f-vector length matches rank")
    }

    /// `sum_{i >= -1} (-1)^i f_i`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { c as i64 } else { -(c as i64) })
            .sum()
    }

    /// All faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> Self {
        let size = (k + 1).max(0) as usize;
        if size >= self.rank() {
            return self.clone();
        }
        let mut gens: HashSet<Vec<Vertex>> = HashSet::new();
        for f in &self.facets {
            if f.len() <= size {
                gens.insert(f.clone());
            } else {
                for sub in subsets_of_size(f, size) {
                    gens.insert(sub);
                }
            }
        }
        Self::from_facets(gens.into_iter().collect())
    }

    /// Every clique of the 1-skeleton is a face.
    pub fn is_flag(&self) -> bool {
        let n = self.vertices.len();
        let pos: HashMap<Vertex, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut adj = vec![BitSet::new(n); n];
        for f in &self.facets {
            for (i, a) in f.iter().enumerate() {
                for b in &f[i + 1..] {
                    adj[pos[a]].insert(pos[b]);
                    adj[pos[b]].insert(pos[a]);
                }
            }
        }
        maximal_cliques(&adj).into_iter().all(|c| {
            let mut face: Vec<Vertex> = c.into_iter().map(|i| self.vertices[i]).collect();
            face.sort_unstable();
            self.contains_face(&face)
        })
    }

    /// Relabels vertices through `perm`, which must be injective on the vertex set.
    pub fn relabel(&self, perm: impl Fn(Vertex) -> Vertex) -> Self {
        Self::from_maximal_facets(
            self.facets.iter().map(|f| f.iter().map(|&v| perm(v)).collect()).collect(),
        )
    }
}

pub(crate) fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}

fn subsets_of_size(f: &[Vertex], k: usize) -> Vec<Vec<Vertex>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(f: &[Vertex], k: usize, start: usize, cur: &mut Vec<Vertex>, out: &mut Vec<Vec<Vertex>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..f.len() {
            cur.push(f[i]);
            go(f, k, i + 1, cur, out);
            cur.pop();
        }
    }
    go(f, k, 0, &mut cur, &mut out);
    out
}

impl FromStr for SimplicialComplex {
    type Err = ComplexError;

    /// One facet per line, vertices separated by whitespace, `#` starts a comment.
    fn from_str(s: &str) -> Result<Self> {
        let mut facets = Vec::new();
        for (i, line) in s.lines().enumerate() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let facet = line
                .split_whitespace()
                .map(|t| t.parse::<Vertex>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|e| ComplexError::Parse { line: i + 1, msg: e.to_string() })?;
            facets.push(facet);
        }
        Ok(Self::from_facets(facets))
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for facet in &self.facets {
            if facet.is_empty() {
                continue;
            }
            let line: Vec<String> = facet.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_and_boundary() {
        assert_eq!(SimplicialComplex::simplex(3).f_vector(), vec![1, 3, 3, 1]);
        assert_eq!(SimplicialComplex::simplex_boundary(3).f_vector(), vec![1, 3, 3]);
        assert_eq!(SimplicialComplex::simplex_boundary(3).h_polynomial(), Poly::from_ints(&[1, 1, 1]));
        for n in 0..6 {
            assert_eq!(SimplicialComplex::simplex(n).h_polynomial(), Poly::one());
        }
        assert_eq!(SimplicialComplex::simplex(0).dim(), -1);
    }

    #[test]
    fn normalization_drops_dominated() {
        let c = SimplicialComplex::from_facets(vec![vec![2, 1], vec![1], vec![3, 1, 2], vec![4]]);
        assert_eq!(c.facets(), &[vec![1, 2, 3], vec![4]]);
        assert!(!c.is_pure());
        assert_eq!(c.vertices(), &[1, 2, 3, 4]);
    }

    #[test]
    fn skeleta() {
        let s4 = SimplicialComplex::simplex(4);
        let sk = s4.skeleton(1);
        assert_eq!(sk.facets().len(), 6);
        assert_eq!(sk.f_vector(), vec![1, 4, 6]);
        assert_eq!(s4.skeleton(3), s4);
    }

    #[test]
    fn file_roundtrip() {
        let c: SimplicialComplex = "# a path\n1 2\n2 3 # second edge\n\n".parse().unwrap();
        assert_eq!(c.facets(), &[vec![1, 2], vec![2, 3]]);
        assert_eq!(c.to_string().parse::<SimplicialComplex>().unwrap(), c);
        assert!("1 x".parse::<SimplicialComplex>().is_err());
        assert_eq!("".parse::<SimplicialComplex>().unwrap(), SimplicialComplex::simplex(0));
    }

    #[test]
    fn flagness() {
        assert!(SimplicialComplex::simplex(3).is_flag());
        assert!(!SimplicialComplex::simplex_boundary(3).is_flag());
        let square: SimplicialComplex = "0 1\n1 2\n2 3\n3 0".parse().unwrap();
        assert!(square.is_flag());
    }

    #[test]
    fn euler_characteristic() {
        assert_eq!(SimplicialComplex::simplex(3).reduced_euler_characteristic(), 0);
        assert_eq!(SimplicialComplex::simplex_boundary(3).reduced_euler_characteristic(), -1);
    }
}
