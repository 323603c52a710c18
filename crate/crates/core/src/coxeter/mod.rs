//! Elements of the reflection group `W`, reflection length, absolute
//! order, bipartite Coxeter elements and the ρ-sequence.
//!
//! A group element is stored as the permutation it induces on the root
//! indices of its [`RootSystem`]. Roots span the ambient space, so this
//! representation is faithful and gives cheap equality and hashing. The
//! matrix of an element in the simple-root basis is recovered from the
//! images of the simple roots when a linear measurement is needed.

mod order;
mod perm;

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

pub use order::{rho_sequence, rho_sequence_of_component, total_order, OrderKeys, RhoSequence, TotalOrder};
pub use perm::{element_of_permutation, Permutation};

use crate::error::{Error, Result};
use crate::exact_algebra::{Matrix, QSqrt5};
use crate::root_system::{ComponentModel, RootSystem};
use crate::ScalarMatrix;

/// Positive-root count above which the word-length search is refused.
pub const WORD_BFS_LIMIT: usize = 60;

/// An element of `W`, as a permutation of root indices.
pub struct GroupElement {
    perm: Box<[u16]>,
    length: OnceLock<usize>,
}

impl Clone for GroupElement {
    fn clone(&self) -> Self {
        let length = OnceLock::new();
        if let Some(&l) = self.length.get() {
            let _ = length.set(l);
        }
        GroupElement {
            perm: self.perm.clone(),
            length,
        }
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.perm.cmp(&other.perm)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{:?}", self.perm)
    }
}

impl GroupElement {
    pub fn from_perm(perm: Vec<u16>) -> Self {
        GroupElement {
            perm: perm.into_boxed_slice(),
            length: OnceLock::new(),
        }
    }

    pub fn identity(rs: &RootSystem) -> Self {
        Self::from_perm((0..rs.num_roots() as u16).collect())
    }

    /// The reflection `R(β)` for any root `β` (positive or negative).
    pub fn reflection(rs: &RootSystem, root: usize) -> Self {
        let g = Self::from_perm(rs.reflection(root).to_vec());
        let _ = g.length.set(1);
        g
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    /// Root-permutation encoding used in serialized output.
    pub fn encoding(&self) -> Vec<u16> {
        self.perm.to_vec()
    }

    pub fn apply(&self, root: usize) -> usize {
        self.perm[root] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }

    /// `self · other`, acting as `other` first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement::from_perm(other.perm.iter().map(|&i| self.perm[i as usize]).collect())
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u16; self.perm.len()];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p as usize] = i as u16;
        }
        let g = GroupElement::from_perm(inv);
        if let Some(&l) = self.length.get() {
            let _ = g.length.set(l);
        }
        g
    }

    /// Product of a sequence of elements, left to right.
    pub fn product<'a>(rs: &RootSystem, items: impl IntoIterator<Item = &'a GroupElement>) -> Self {
        items
            .into_iter()
            .fold(GroupElement::identity(rs), |acc, g| acc.compose(g))
    }

    /// Matrix in the basis of simple roots, or `None` when some component
    /// uses the combinatorial dihedral model.
    pub fn matrix(&self, rs: &RootSystem) -> Option<ScalarMatrix> {
        let n = rs.rank();
        let cols: Option<Vec<Vec<QSqrt5>>> = (0..n)
            .map(|i| {
                rs.root(self.apply(rs.simple_root(i)))
                    .expansion()
                    .map(<[QSqrt5]>::to_vec)
            })
            .collect();
        let cols = cols?;
        Some(Matrix::from_fn(n, n, |i, j| cols[j][i].clone()))
    }

    /// `ℓ_T(w)` by the fixed-space rule, cached.
    pub fn reflection_length(&self, rs: &RootSystem) -> usize {
        *self.length.get_or_init(|| fixed_space_length(rs, self))
    }
}

/// How `ℓ_T` is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LengthMode {
    /// Codimension of the fixed space.
    FixedSpace,
    /// Breadth-first search over products of reflections.
    WordBfs,
}

// Hashing uses only the permutation, never the cached length.
#[allow(clippy::mutable_key_type)]
pub fn reflection_length(rs: &RootSystem, w: &GroupElement, mode: LengthMode) -> Result<usize> {
    match mode {
        LengthMode::FixedSpace => Ok(w.reflection_length(rs)),
        LengthMode::WordBfs => {
            guard_bfs(rs)?;
            let mut dist: HashMap<GroupElement, usize> = HashMap::new();
            let e = GroupElement::identity(rs);
            if *w == e {
                return Ok(0);
            }
            let refl: Vec<GroupElement> = (0..rs.num_positive())
                .map(|p| GroupElement::reflection(rs, p))
                .collect();
            let mut queue = VecDeque::from([e.clone()]);
            dist.insert(e, 0);
            while let Some(u) = queue.pop_front() {
                let d = dist[&u];
                for t in &refl {
                    let v = u.compose(t);
                    if dist.contains_key(&v) {
                        continue;
                    }
                    if v == *w {
                        return Ok(d + 1);
                    }
                    dist.insert(v.clone(), d + 1);
                    queue.push_back(v);
                }
            }
            Err(Error::Invalid("element not generated by the reflections".into()))
        }
    }
}

/// Reflection length of every element of `W`, by breadth-first search.
#[allow(clippy::mutable_key_type)]
pub fn word_length_table(rs: &RootSystem) -> Result<HashMap<GroupElement, usize>> {
    guard_bfs(rs)?;
    let refl: Vec<GroupElement> = (0..rs.num_positive())
        .map(|p| GroupElement::reflection(rs, p))
        .collect();
    let e = GroupElement::identity(rs);
    let mut dist = HashMap::from([(e.clone(), 0)]);
    let mut queue = VecDeque::from([e]);
    while let Some(u) = queue.pop_front() {
        let d = dist[&u];
        for t in &refl {
            let v = u.compose(t);
            if !dist.contains_key(&v) {
                dist.insert(v.clone(), d + 1);
                queue.push_back(v);
            }
        }
    }
    Ok(dist)
}

fn guard_bfs(rs: &RootSystem) -> Result<()> {
    if rs.num_positive() > WORD_BFS_LIMIT {
        return Err(Error::OracleGuard {
            positive_roots: rs.num_positive(),
            limit: WORD_BFS_LIMIT,
        });
    }
    Ok(())
}

fn fixed_space_length(rs: &RootSystem, w: &GroupElement) -> usize {
    if w.is_identity() {
        return 0;
    }
    rs.components()
        .iter()
        .map(|c| match &c.model {
            ComponentModel::Linear => {
                let k = c.simple.len();
                let m = Matrix::from_fn(k, k, |i, j| {
                    let img = w.apply(rs.simple_root(c.simple[j]));
                    let e = rs.root(img).expansion().expect("linear component has expansions");
                    let v = e[c.simple[i]].clone();
                    if i == j {
                        v - QSqrt5::from_integer(1)
                    } else {
                        v
                    }
                });
                m.rank()
            }
            ComponentModel::Dihedral { by_angle, .. } => {
                let period = by_angle.len();
                let angle = |root: usize| {
                    by_angle
                        .iter()
                        .position(|&x| x == root)
                        .expect("dihedral root")
                };
                let a = angle(w.apply(by_angle[0]));
                let b = angle(w.apply(by_angle[1]));
                if b == (a + 1) % period {
                    if a == 0 {
                        0
                    } else {
                        2
                    }
                } else {
                    1
                }
            }
        })
        .sum()
}

/// `u ≼ w` iff `ℓ_T(u) + ℓ_T(u⁻¹w) = ℓ_T(w)`.
pub fn absolute_leq(rs: &RootSystem, u: &GroupElement, w: &GroupElement) -> bool {
    let lu = u.reflection_length(rs);
    let lw = w.reflection_length(rs);
    if lu > lw {
        return false;
    }
    lu + u.inverse().compose(w).reflection_length(rs) == lw
}

/// Simple indices in Coxeter-product order: Π+ then Π−, each increasing.
pub fn coxeter_order(rs: &RootSystem) -> Vec<usize> {
    let (plus, minus) = rs.bipartition();
    plus.into_iter().chain(minus).collect()
}

/// `γ = R(α_1) ⋯ R(α_n)` with the simple roots of Π+ first. For a
/// reducible system this is the product of the components' elements.
pub fn bipartite_coxeter(rs: &RootSystem) -> GroupElement {
    let refl: Vec<GroupElement> = coxeter_order(rs)
        .into_iter()
        .map(|k| GroupElement::reflection(rs, rs.simple_root(k)))
        .collect();
    GroupElement::product(rs, &refl)
}

/// `R_ε`: product of the reflections in the simple roots of Π_ε.
pub fn side_product(rs: &RootSystem, plus: bool) -> GroupElement {
    let refl: Vec<GroupElement> = (0..rs.rank())
        .filter(|&k| rs.is_plus(k) == plus)
        .map(|k| GroupElement::reflection(rs, rs.simple_root(k)))
        .collect();
    GroupElement::product(rs, &refl)
}

/// The interval `[e, w]` of the absolute order, enumerated by closure from
/// the identity: right-multiply by reflections while the length grows by
/// one and the result stays below `w`. Sorted by length, then encoding.
#[allow(clippy::mutable_key_type)]
pub fn interval_below(rs: &RootSystem, w: &GroupElement) -> Vec<GroupElement> {
    let refl: Vec<GroupElement> = (0..rs.num_positive())
        .map(|p| GroupElement::reflection(rs, p))
        .collect();
    let e = GroupElement::identity(rs);
    let mut seen: HashSet<GroupElement> = HashSet::from([e.clone()]);
    let mut frontier = vec![e];
    let mut out = frontier.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for u in &frontier {
            let lu = u.reflection_length(rs);
            for t in &refl {
                let v = u.compose(t);
                if seen.contains(&v) {
                    continue;
                }
                if v.reflection_length(rs) == lu + 1 && absolute_leq(rs, &v, w) {
                    seen.insert(v.clone());
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort_by(|a, b| {
        a.reflection_length(rs)
            .cmp(&b.reflection_length(rs))
            .then_with(|| a.cmp(b))
    });
    out
}

/// Exact eigenvalue-angle check of the exponents: for every `k` in
/// `1..=h`, the fixed space of `γ^k` has dimension `#{j : h | k·e_j}`,
/// which is the number of eigenvalues `exp(2πi·e_j/h)` with `k`-th power 1.
pub fn check_exponents_by_eigenvalues(rs: &RootSystem) -> Result<bool> {
    let num = rs.numerology()?;
    let h = num.coxeter_number;
    let gamma = bipartite_coxeter(rs);
    let n = rs.rank();
    let mut power = GroupElement::identity(rs);
    for k in 1..=h {
        power = power.compose(&gamma);
        let fixed = n - power.reflection_length(rs);
        let expected = num.exponents.iter().filter(|&&e| (k * e) % h == 0).count();
        if fixed != expected {
            return Ok(false);
        }
        if (k < h) == power.is_identity() {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a2() -> RootSystem {
        RootSystem::build("A", 2, None).unwrap()
    }

    #[test]
    fn lengths_of_basic_elements() {
        let rs = a2();
        let e = GroupElement::identity(&rs);
        assert_eq!(reflection_length(&rs, &e, LengthMode::FixedSpace), Ok(0));
        for p in 0..3 {
            let t = GroupElement::reflection(&rs, p);
            assert_eq!(t.reflection_length(&rs), 1);
            assert_eq!(reflection_length(&rs, &GroupElement::from_perm(t.encoding()), LengthMode::FixedSpace), Ok(1));
        }
        let g = bipartite_coxeter(&rs);
        assert_eq!(reflection_length(&rs, &g, LengthMode::FixedSpace), Ok(2));
        assert_eq!(reflection_length(&rs, &g, LengthMode::WordBfs), Ok(2));
    }

    #[test]
    fn gamma_in_a2_is_a_rotation_of_order_three() {
        let rs = a2();
        let g = bipartite_coxeter(&rs);
        let m = g.matrix(&rs).unwrap();
        assert_eq!(m.fixed_space_dim(), Ok(0));
        assert!(m.pow(3).unwrap().is_identity());
        assert!(!m.is_identity());
        // α1 ↦ α2 ↦ −α1 − α2 under R(α1)R(α2)
        assert_eq!(g.apply(0), 1);
    }

    #[test]
    fn absolute_order_examples() {
        let rs = a2();
        let g = bipartite_coxeter(&rs);
        let e = GroupElement::identity(&rs);
        assert!(absolute_leq(&rs, &e, &g));
        for p in 0..3 {
            let t = GroupElement::reflection(&rs, p);
            assert!(absolute_leq(&rs, &t, &g));
            assert!(!absolute_leq(&rs, &g, &t));
        }
    }

    #[test]
    fn a1_and_a3_coxeter_elements() {
        let a1 = RootSystem::build("A", 1, None).unwrap();
        assert_eq!(bipartite_coxeter(&a1), GroupElement::reflection(&a1, 0));
        let a3 = RootSystem::build("A", 3, None).unwrap();
        let g = bipartite_coxeter(&a3);
        assert_eq!(g.reflection_length(&a3), 3);
    }

    #[test]
    fn bfs_guard() {
        let e7 = RootSystem::build("E", 7, None).unwrap();
        let e = GroupElement::identity(&e7);
        assert!(matches!(
            reflection_length(&e7, &e, LengthMode::WordBfs),
            Err(Error::OracleGuard { positive_roots: 63, limit: 60 })
        ));
    }

    #[test]
    fn dihedral_lengths() {
        let rs = RootSystem::build("I", 2, Some(7)).unwrap();
        let g = bipartite_coxeter(&rs);
        assert_eq!(g.reflection_length(&rs), 2);
        assert_eq!(reflection_length(&rs, &g, LengthMode::WordBfs), Ok(2));
        let mut p = GroupElement::identity(&rs);
        for _ in 0..7 {
            p = p.compose(&g);
        }
        assert!(p.is_identity());
        assert_eq!(interval_below(&rs, &g).len(), 7 + 2);
    }

    #[test]
    fn interval_sizes() {
        assert_eq!(interval_below(&a2(), &bipartite_coxeter(&a2())).len(), 5);
        let a3 = RootSystem::build("A", 3, None).unwrap();
        assert_eq!(interval_below(&a3, &bipartite_coxeter(&a3)).len(), 14);
    }
}
