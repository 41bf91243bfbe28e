//! Barycentric, r-fold edgewise and r-colored barycentric subdivisions.

use std::collections::HashMap;

use crate::cliques::{maximal_cliques, BitSet};
use crate::complex::{SimplicialComplex, Vertex};

/// A subdivision together with the carrier of each new vertex: the smallest
/// face of the original complex containing it.
#[derive(Clone, Debug)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// Indexed by new vertex label; sorted faces of the original complex.
    pub carriers: Vec<Vec<Vertex>>,
}

impl Subdivision {
    pub fn identity(delta: &SimplicialComplex) -> Self {
        let max = delta.vertices().last().map_or(0, |&v| v as usize + 1);
        let mut carriers = vec![Vec::new(); max];
        for &v in delta.vertices() {
            carriers[v as usize] = vec![v];
        }
        Subdivision { complex: delta.clone(), carriers }
    }

    /// Carrier of a face: the union of its vertices' carriers.
    pub fn carrier_of(&self, face: &[Vertex]) -> Vec<Vertex> {
        let mut c: Vec<Vertex> =
            face.iter().flat_map(|&v| self.carriers[v as usize].iter().copied()).collect();
        c.sort_unstable();
        c.dedup();
        c
    }

    /// `self` subdivides `inner.complex`; re-express carriers in terms of the
    /// complex `inner` subdivides.
    pub fn compose(self, inner: &Subdivision) -> Subdivision {
        let carriers = self.carriers.iter().map(|c| inner.carrier_of(c)).collect();
        Subdivision { complex: self.complex, carriers }
    }
}

/// Which subdivision to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Construction {
    Identity,
    Barycentric,
    Edgewise(usize),
    Colored(usize),
}

impl Construction {
    pub fn apply(self, delta: &SimplicialComplex) -> Subdivision {
        match self {
            Construction::Identity => Subdivision::identity(delta),
            Construction::Barycentric => barycentric_subdivision(delta),
            Construction::Edgewise(r) => edgewise_subdivision(delta, r),
            Construction::Colored(r) => colored_subdivision(delta, r),
        }
    }
}

/// `sd(Δ)`: vertices are the nonempty faces (labelled in order of size, then
/// lexicographically), faces are chains under inclusion.
pub fn barycentric_subdivision(delta: &SimplicialComplex) -> Subdivision {
    let faces: Vec<Vec<Vertex>> = delta.faces().into_iter().filter(|f| !f.is_empty()).collect();
    let id: HashMap<&[Vertex], Vertex> =
        faces.iter().enumerate().map(|(i, f)| (f.as_slice(), i as Vertex)).collect();
    let mut facets = Vec::new();
    for f in delta.facets() {
        if f.is_empty() {
            continue;
        }
        permutations(f.len(), &mut |perm| {
            let mut prefix: Vec<Vertex> = Vec::with_capacity(f.len());
            let chain = perm
                .iter()
                .map(|&i| {
                    prefix.push(f[i]);
                    let mut s = prefix.clone();
                    s.sort_unstable();
                    id[s.as_slice()]
                })
                .collect();
            facets.push(chain);
        });
    }
    Subdivision { complex: SimplicialComplex::from_maximal_facets(facets), carriers: faces }
}

fn permutations(n: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(cur: &mut Vec<usize>, used: &mut [bool], visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == used.len() {
            visit(cur);
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                cur.push(i);
                go(cur, used, visit);
                cur.pop();
                used[i] = false;
            }
        }
    }
    go(&mut Vec::with_capacity(n), &mut vec![false; n], visit);
}

/// A vertex of `esd_r(Δ)`: a map `V(Δ) → ℕ` with weight `r` and support a
/// face, canonicalized as sorted `(vertex, weight)` pairs with positive weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgewiseVertex(pub Vec<(Vertex, u32)>);

impl EdgewiseVertex {
    pub fn support(&self) -> Vec<Vertex> {
        self.0.iter().map(|&(v, _)| v).collect()
    }
}

/// Weak compositions of `r` into `k` parts.
fn compositions(r: usize, k: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; k];
    fn go(i: usize, left: usize, cur: &mut [u32], out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left as u32;
            out.push(cur.to_vec());
            return;
        }
        for a in 0..=left {
            cur[i] = a as u32;
            go(i + 1, left - a, cur, out);
        }
    }
    if k > 0 {
        go(0, r, &mut cur, &mut out);
    }
    out
}

/// `ι(f) − ι(g) ∈ {0,1}^k` or the reverse, comparing prefix sums along the
/// facet's vertex order. Outside the facet the prefix sums are constant, so
/// restricting to it matches the global ordering.
fn compatible(f: &[u32], g: &[u32]) -> bool {
    let (mut pf, mut pg) = (0i64, 0i64);
    let (mut up, mut down) = (true, true);
    for (a, b) in f.iter().zip(g) {
        pf += *a as i64;
        pg += *b as i64;
        let d = pf - pg;
        up &= d == 0 || d == 1;
        down &= d == 0 || d == -1;
    }
    up || down
}

/// `esd_r(Δ)` on the vertex order given by the integer labels.
pub fn edgewise_subdivision(delta: &SimplicialComplex, r: usize) -> Subdivision {
    assert!(r >= 1, "edgewise subdivision needs r >= 1");
    let mut ids: HashMap<EdgewiseVertex, Vertex> = HashMap::new();
    let mut labels: Vec<EdgewiseVertex> = Vec::new();
    let mut facets = Vec::new();
    for f in delta.facets() {
        if f.is_empty() {
            continue;
        }
        let local = compositions(r, f.len());
        let mut adj = vec![BitSet::new(local.len()); local.len()];
        for i in 0..local.len() {
            for j in i + 1..local.len() {
                if compatible(&local[i], &local[j]) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let global: Vec<Vertex> = local
            .iter()
            .map(|w| {
                let key = EdgewiseVertex(
                    f.iter().zip(w).filter(|(_, &a)| a > 0).map(|(&v, &a)| (v, a)).collect(),
                );
                *ids.entry(key.clone()).or_insert_with(|| {
                    labels.push(key);
                    (labels.len() - 1) as Vertex
                })
            })
            .collect();
        for clique in maximal_cliques(&adj) {
            facets.push(clique.into_iter().map(|i| global[i]).collect());
        }
    }
    let carriers = labels.iter().map(EdgewiseVertex::support).collect();
    Subdivision { complex: SimplicialComplex::from_maximal_facets(facets), carriers }
}

/// `sd_r(Δ) = esd_r(sd(Δ))`.
pub fn colored_subdivision(delta: &SimplicialComplex, r: usize) -> Subdivision {
    let sd = barycentric_subdivision(delta);
    edgewise_subdivision(&sd.complex, r).compose(&sd)
}
