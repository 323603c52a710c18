use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::exact_algebra::{smith_normal_form_sparse, SparseRows};

/// Reduced homology in one degree: `Z^rank ⊕ ⨁ Z/t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub dim: isize,
    pub rank: usize,
    #[serde(serialize_with = "as_strings")]
    pub torsion: Vec<BigInt>,
}

fn as_strings<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

/// Reduced integral homology in degrees `-1..=dim`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
    pub reduced_euler_characteristic: i64,
}

impl HomologyProfile {
    pub fn group(&self, dim: isize) -> Option<&HomologyGroup> {
        self.groups.iter().find(|g| g.dim == dim)
    }

    /// Reduced Betti number in degree `dim` (0 outside the computed range).
    pub fn betti(&self, dim: isize) -> usize {
        self.group(dim).map_or(0, |g| g.rank)
    }

    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_trivial)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// Free of the given rank in degree `dim` and zero elsewhere.
    pub fn is_wedge_of_spheres(&self, count: usize, dim: isize) -> bool {
        self.groups.iter().all(|g| {
            g.torsion.is_empty() && g.rank == if g.dim == dim { count } else { 0 }
        }) && (count == 0 || self.group(dim).is_some())
    }

    /// Ranks and torsion agree in every degree, treating missing degrees as
    /// zero.
    pub fn same_as(&self, other: &HomologyProfile) -> bool {
        let nontrivial = |p: &HomologyProfile| -> Vec<HomologyGroup> {
            p.groups.iter().filter(|g| !g.is_trivial()).cloned().collect()
        };
        nontrivial(self) == nontrivial(other)
    }
}

/// `Σ_{i ≥ -1} (−1)^i f_i`.
pub fn reduced_euler_characteristic(cx: &SimplicialComplex) -> i64 {
    cx.f_vector()
        .iter()
        .enumerate()
        .map(|(k, &f)| if k % 2 == 0 { -(f as i64) } else { f as i64 })
        .sum()
}

/// Reduced homology over `Z` from the Smith normal forms of the
/// boundary maps, including the augmentation to `C_{-1} = Z·∅`.
pub fn homology(cx: &SimplicialComplex) -> HomologyProfile {
    let faces = cx.faces_by_size();
    let index: Vec<HashMap<&[usize], usize>> = faces
        .iter()
        .map(|level| level.iter().enumerate().map(|(i, f)| (f.as_slice(), i)).collect())
        .collect();
    // boundary[s]: faces of size s → faces of size s − 1, for s ≥ 1
    let mut ranks = vec![0usize; faces.len() + 1];
    let mut torsion: Vec<Vec<BigInt>> = vec![Vec::new(); faces.len() + 1];
    for s in 1..faces.len() {
        let mut rows = SparseRows::new(faces[s - 1].len());
        for f in &faces[s] {
            let mut entries: Vec<(usize, BigInt)> = (0..f.len())
                .map(|drop| {
                    let sub: Vec<usize> = f
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != drop)
                        .map(|(_, &v)| v)
                        .collect();
                    let sign = if drop % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                    (index[s - 1][sub.as_slice()], sign)
                })
                .collect();
            entries.sort_by_key(|e| e.0);
            rows.push_row(entries);
        }
        let snf = smith_normal_form_sparse(rows);
        ranks[s] = snf.rank;
        torsion[s] = snf.torsion();
    }
    let groups = (0..faces.len())
        .map(|s| HomologyGroup {
            dim: s as isize - 1,
            rank: faces[s].len() - ranks[s] - ranks[s + 1],
            torsion: torsion[s + 1].clone(),
        })
        .collect();
    HomologyProfile {
        groups,
        reduced_euler_characteristic: reduced_euler_characteristic(cx),
    }
}
