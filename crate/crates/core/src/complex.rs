//! Finite abstract simplicial complexes given by their facets.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};

/// A face: strictly increasing vertex ids.
pub type Face = Vec<usize>;

/// A simplicial complex stored as its inclusion-maximal faces, each sorted,
/// listed in lexicographic order. The complex always contains the empty
/// face; the void complex is not representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
}

fn is_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`; non-maximal entries and
    /// duplicates are dropped.
    pub fn new(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut cands: Vec<Face> = faces
            .into_iter()
            .map(|mut f| {
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        cands.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let mut kept: Vec<Face> = Vec::new();
        for f in cands {
            if !kept.iter().any(|g| g.len() > f.len() && is_subset(&f, g)) {
                kept.push(f);
            }
        }
        if kept.is_empty() {
            kept.push(Vec::new());
        }
        kept.sort();
        SimplicialComplex { facets: kept }
    }

    /// The complex `{∅}`.
    pub fn empty() -> Self {
        SimplicialComplex {
            facets: vec![Vec::new()],
        }
    }

    /// The full simplex on the given vertices.
    pub fn simplex(vertices: Face) -> Self {
        Self::new([vertices])
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> Vec<usize> {
        let set: BTreeSet<usize> = self.facets.iter().flatten().copied().collect();
        set.into_iter().collect()
    }

    /// Dimension, `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    pub fn is_pure(&self) -> bool {
        let d = self.facets[0].len();
        self.facets.iter().all(|f| f.len() == d)
    }

    /// Whether the (sorted or unsorted) vertex set is a face.
    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        f.dedup();
        self.facets.iter().any(|g| is_subset(&f, g))
    }

    /// All faces grouped by size: entry `k` lists the faces with `k`
    /// vertices, sorted.
    pub fn faces_by_size(&self) -> Vec<Vec<Face>> {
        let top = self.facets.iter().map(Vec::len).max().unwrap_or(0);
        let mut sets: Vec<HashSet<Face>> = vec![HashSet::new(); top + 1];
        for f in &self.facets {
            let k = f.len();
            for mask in 0u64..(1u64 << k) {
                let sub: Face = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| f[i]).collect();
                sets[sub.len()].insert(sub);
            }
        }
        sets.into_iter()
            .map(|s| {
                let mut v: Vec<Face> = s.into_iter().collect();
                v.sort();
                v
            })
            .collect()
    }

    /// All faces, by size and then lexicographically.
    pub fn faces(&self) -> Vec<Face> {
        self.faces_by_size().into_iter().flatten().collect()
    }

    /// `(f_{-1}, f_0, …, f_{d-1})`, where `f_i` counts `i`-dimensional faces.
    pub fn f_vector(&self) -> Vec<u64> {
        self.faces_by_size().iter().map(|s| s.len() as u64).collect()
    }

    /// `h_k = Σ_i (−1)^{k−i} C(d−i, k−i) f_{i−1}` for `k = 0..=d`, with
    /// `d = dim + 1`.
    pub fn h_vector(&self) -> Vec<BigInt> {
        h_from_f(&self.f_vector())
    }

    /// `lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}`.
    pub fn link(&self, face: &[usize]) -> Result<SimplicialComplex> {
        let mut f = face.to_vec();
        f.sort_unstable();
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| is_subset(&f, g))
            .map(|g| g.iter().copied().filter(|x| f.binary_search(x).is_err()).collect())
            .collect();
        if facets.is_empty() {
            return Err(Error::Invalid(format!("{face:?} is not a face")));
        }
        Ok(SimplicialComplex::new(facets))
    }

    /// Faces avoiding `v`.
    pub fn deletion(&self, v: usize) -> SimplicialComplex {
        SimplicialComplex::new(
            self.facets
                .iter()
                .map(|g| g.iter().copied().filter(|&x| x != v).collect::<Face>()),
        )
    }

    /// Faces whose vertices all lie in `keep`.
    pub fn induced(&self, keep: &[usize]) -> SimplicialComplex {
        let keep: HashSet<usize> = keep.iter().copied().collect();
        SimplicialComplex::new(
            self.facets
                .iter()
                .map(|g| g.iter().copied().filter(|x| keep.contains(x)).collect::<Face>()),
        )
    }

    /// Faces of dimension at most `k`.
    pub fn skeleton(&self, k: isize) -> SimplicialComplex {
        if k < 0 {
            return SimplicialComplex::empty();
        }
        let size = (k + 1) as usize;
        let mut out: BTreeSet<Face> = BTreeSet::new();
        for f in &self.facets {
            if f.len() <= size {
                out.insert(f.clone());
            } else {
                for sub in k_subsets(f, size) {
                    out.insert(sub);
                }
            }
        }
        SimplicialComplex::new(out)
    }

    /// `Δ * Γ`; the vertex sets must be disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let a: HashSet<usize> = self.vertices().into_iter().collect();
        if other.vertices().iter().any(|v| a.contains(v)) {
            return Err(Error::Invalid("join of complexes sharing a vertex".into()));
        }
        let mut facets = Vec::new();
        for f in &self.facets {
            for g in &other.facets {
                facets.push(f.iter().chain(g).copied().collect());
            }
        }
        Ok(SimplicialComplex::new(facets))
    }

    /// Cone with apex `v`, which must be a new vertex.
    pub fn cone(&self, v: usize) -> Result<SimplicialComplex> {
        self.join(&SimplicialComplex::simplex(vec![v]))
    }

    /// `v` lies in every facet.
    pub fn is_cone_point(&self, v: usize) -> bool {
        self.facets.iter().all(|f| f.binary_search(&v).is_ok())
    }

    /// Renames the vertices through `map`.
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> SimplicialComplex {
        SimplicialComplex::new(
            self.facets
                .iter()
                .map(|f| f.iter().map(|&v| map(v)).collect::<Face>()),
        )
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.facets.iter().all(|f| other.contains(f))
    }
}

/// All `k`-element subsets of a sorted face, in lexicographic order.
pub fn k_subsets(face: &[usize], k: usize) -> Vec<Face> {
    let n = face.len();
    if k > n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| face[i]).collect());
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// h-vector of a `(d−1)`-dimensional complex from `(f_{-1}, …, f_{d-1})`.
pub fn h_from_f(f: &[u64]) -> Vec<BigInt> {
    let d = f.len() as u64 - 1;
    (0..=d)
        .map(|k| {
            (0..=k)
                .map(|i| {
                    let term = binomial(d - i, k - i) * BigInt::from(f[i as usize]);
                    if (k - i) % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum()
        })
        .collect()
}
