//! The interval `[e, γ]` of the absolute order, the poset `L^(m)` of
//! `m`-tuples with length-additive product below `γ` (ordered
//! componentwise), and the map `f` from faces of `Δ^m_+(Φ)` to it.
//!
//! The order on `L^(m)` is exactly the componentwise one, `u ≤ w` iff
//! `u_i ≼ w_i` for all `i`; the dual of Armstrong's order is not used.

mod poset;

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

pub use poset::{PosetSummary, PosetView};

use crate::colored_complex::{build_complex, ClusterComplex, ColoredRoots};
use crate::complex::{Face, SimplicialComplex};
use crate::coxeter::{absolute_leq, bipartite_coxeter, interval_below, GroupElement};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;
use crate::topology::{homology, HomologyProfile};

/// `{w : w ≼ γ}` with its order.
#[derive(Debug, Clone)]
pub struct NcInterval {
    pub elements: Vec<GroupElement>,
    pub poset: PosetView,
}

pub fn nc_interval(rs: &RootSystem) -> NcInterval {
    let gamma = bipartite_coxeter(rs);
    let elements = interval_below(rs, &gamma);
    let ranks = elements.iter().map(|w| w.reflection_length(rs)).collect();
    let poset = PosetView::from_relation(elements.len(), ranks, |i, j| {
        absolute_leq(rs, &elements[i], &elements[j])
    });
    NcInterval { elements, poset }
}

/// `L^(m)`: tuples `(w_1, …, w_m)` with `ℓ_T(w_1⋯w_m) = Σ ℓ_T(w_i)` and
/// `w_1⋯w_m ≼ γ`. Tuples are stored as indices into `interval`.
#[derive(Debug, Clone)]
pub struct NcPoset {
    pub m: usize,
    pub interval: NcInterval,
    pub tuples: Vec<Vec<usize>>,
    pub poset: PosetView,
    index: HashMap<Vec<usize>, usize>,
}

/// Poset JSON: tuples as root-permutation encodings, ranks and covers.
#[derive(Debug, Clone, Serialize)]
pub struct NcPosetJson {
    pub phi: String,
    pub m: usize,
    pub elements: Vec<Vec<Vec<u16>>>,
    pub rank: Vec<usize>,
    pub covers: Vec<Vec<usize>>,
}

pub fn build_lm(rs: &RootSystem, m: usize) -> Result<NcPoset> {
    if m == 0 {
        return Err(Error::Invalid("L^(m) needs m ≥ 1".into()));
    }
    let interval = nc_interval(rs);
    let gamma = bipartite_coxeter(rs);
    let els = &interval.elements;
    let lens: Vec<usize> = els.iter().map(|w| w.reflection_length(rs)).collect();
    // partial tuples with their product and total length
    let mut partial: Vec<(Vec<usize>, GroupElement, usize)> =
        vec![(Vec::new(), GroupElement::identity(rs), 0)];
    for _ in 0..m {
        let mut next = Vec::new();
        for (t, p, l) in &partial {
            let budget = gamma.reflection_length(rs) - l;
            for (i, w) in els.iter().enumerate() {
                if lens[i] > budget {
                    continue;
                }
                let q = p.compose(w);
                if q.reflection_length(rs) == l + lens[i] && absolute_leq(rs, &q, &gamma) {
                    let mut t2 = t.clone();
                    t2.push(i);
                    next.push((t2, q, l + lens[i]));
                }
            }
        }
        partial = next;
    }
    let tuples: Vec<Vec<usize>> = partial.into_iter().map(|(t, _, _)| t).collect();
    let ranks: Vec<usize> = tuples.iter().map(|t| t.iter().map(|&i| lens[i]).sum()).collect();
    let ip = &interval.poset;
    let poset = PosetView::from_relation(tuples.len(), ranks, |a, b| {
        tuples[a].iter().zip(&tuples[b]).all(|(&u, &w)| ip.leq(u, w))
    });
    let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
    Ok(NcPoset {
        m,
        interval,
        tuples,
        poset,
        index,
    })
}

impl NcPoset {
    pub fn index_of(&self, tuple: &[GroupElement]) -> Option<usize> {
        let idx: Option<Vec<usize>> = tuple
            .iter()
            .map(|w| self.interval.elements.iter().position(|x| x == w))
            .collect();
        self.index.get(&idx?).copied()
    }

    pub fn tuple(&self, i: usize) -> Vec<GroupElement> {
        self.tuples[i]
            .iter()
            .map(|&k| self.interval.elements[k].clone())
            .collect()
    }

    /// The bottom `(e, …, e)`.
    pub fn bottom(&self) -> usize {
        self.poset.bottom().expect("L^(m) has a least element")
    }

    /// Every componentwise-smaller tuple of a member is a member.
    pub fn is_downward_closed(&self) -> bool {
        let ip = &self.interval.poset;
        self.tuples.iter().all(|t| {
            let below: Vec<Vec<usize>> = t
                .iter()
                .map(|&w| (0..ip.len()).filter(|&u| ip.leq(u, w)).collect())
                .collect();
            cartesian(&below).iter().all(|u| self.index.contains_key(u))
        })
    }

    pub fn to_json(&self, rs: &RootSystem) -> NcPosetJson {
        let s = self.poset.summary();
        NcPosetJson {
            phi: rs.label().to_string(),
            m: self.m,
            elements: (0..self.tuples.len())
                .map(|i| self.tuple(i).iter().map(GroupElement::encoding).collect())
                .collect(),
            rank: s.rank,
            covers: s.covers,
        }
    }
}

fn cartesian(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().fold(vec![Vec::new()], |acc, s| {
        acc.iter()
            .flat_map(|p| {
                s.iter().map(move |&x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect()
    })
}

/// `f(σ) = (w_{σ(m)}, …, w_{σ(1)})` for a nonempty face of `Δ^m_+(Φ)`.
pub fn face_to_tuple(roots: &ColoredRoots, face: &[usize]) -> Result<Vec<GroupElement>> {
    if face.is_empty() {
        return Err(Error::Invalid("f is defined on nonempty faces".into()));
    }
    if face.iter().any(|&v| roots.is_negative_simple(v)) {
        return Err(Error::Invalid("face contains a negative simple root".into()));
    }
    Ok((1..=roots.m())
        .rev()
        .map(|c| {
            let class: Vec<usize> = face
                .iter()
                .copied()
                .filter(|&v| roots.vertex(v).color == c)
                .collect();
            roots.word_of_face(&class)
        })
        .collect())
}

/// Result of comparing `(Δ^m_+)^{≤k−1}` with the order complex of
/// `L^{≤k} − 0̂`.
#[derive(Debug, Clone, Serialize)]
pub struct HomotopyComparison {
    pub k: usize,
    pub skeleton: HomologyProfile,
    pub poset: HomologyProfile,
    pub fibers_checked: usize,
    pub fibers_acyclic: bool,
    pub fibers_are_joins: bool,
    pub lengths_additive: bool,
    pub order_preserving: bool,
}

impl HomotopyComparison {
    pub fn passed(&self) -> bool {
        self.skeleton.same_as(&self.poset)
            && self.fibers_acyclic
            && self.fibers_are_joins
            && self.lengths_additive
            && self.order_preserving
    }
}

/// The faces `σ` of `Δ^m_+` with `f(σ) ≤ x`, and the join over colors `j`
/// of the color-`j` part of `Δ^m_+(x_{m−j+1})`.
pub fn fiber_complexes(
    cc: &ClusterComplex,
    lm: &NcPoset,
    images: &[(Face, usize)],
    x: usize,
) -> Result<(SimplicialComplex, SimplicialComplex)> {
    let fiber = SimplicialComplex::new(
        images
            .iter()
            .filter(|(_, i)| lm.poset.leq(*i, x))
            .map(|(f, _)| f.clone()),
    );
    let roots = &cc.roots;
    let m = roots.m();
    let mut join = SimplicialComplex::empty();
    for (slot, w) in lm.tuple(x).iter().enumerate() {
        let color = m - slot;
        let below = cc.subcomplex_below(w)?;
        let ids: Vec<usize> = below
            .vertices()
            .into_iter()
            .filter(|&v| roots.vertex(v).color == color)
            .collect();
        join = join.join(&below.induced(&ids))?;
    }
    Ok((fiber, join))
}

pub fn homotopy_compare(rs: &RootSystem, m: usize, k: usize) -> Result<HomotopyComparison> {
    if k == 0 || k > rs.rank() {
        return Err(Error::Invalid(format!("k = {k} outside 1..={}", rs.rank())));
    }
    let cc = build_complex(rs, m)?;
    let lm = build_lm(rs, m)?;
    let pos = cc.positive_part();
    let skeleton = pos.skeleton(k as isize - 1);

    let (trunc, map) = lm.poset.truncate(k);
    let bottom = map
        .iter()
        .position(|&i| i == lm.bottom())
        .expect("bottom has rank 0");
    let poset = homology(&trunc.order_complex(&[bottom]));

    let faces: Vec<Face> = skeleton.faces().into_iter().filter(|f| !f.is_empty()).collect();
    let mut images = Vec::with_capacity(faces.len());
    let mut lengths_additive = true;
    for f in &faces {
        let t = face_to_tuple(&cc.roots, f)?;
        let total: usize = t.iter().map(|w| w.reflection_length(rs)).sum();
        lengths_additive &= total == f.len();
        let i = lm.index_of(&t).ok_or_else(|| {
            Error::TheoremViolation(format!("f({f:?}) is not an element of L^(m)"))
        })?;
        images.push((f.clone(), i));
    }
    let image_of: HashMap<&Face, usize> = images.iter().map(|(f, i)| (f, *i)).collect();
    let order_preserving = images.iter().all(|(f, i)| {
        (0..f.len()).all(|drop| {
            let mut g = f.clone();
            g.remove(drop);
            g.is_empty() || lm.poset.leq(image_of[&g], *i)
        })
    });

    let xs: Vec<usize> = map.iter().copied().filter(|&i| i != lm.bottom()).collect();
    let checks: Vec<Result<(bool, bool)>> = xs
        .par_iter()
        .map(|&x| {
            let (fiber, join) = fiber_complexes(&cc, &lm, &images, x)?;
            Ok((homology(&fiber).is_acyclic(), fiber == join))
        })
        .collect();
    let mut fibers_acyclic = true;
    let mut fibers_are_joins = true;
    for c in checks {
        let (a, j) = c?;
        fibers_acyclic &= a;
        fibers_are_joins &= j;
    }
    Ok(HomotopyComparison {
        k,
        skeleton: homology(&skeleton),
        poset,
        fibers_checked: xs.len(),
        fibers_acyclic,
        fibers_are_joins,
        lengths_additive,
        order_preserving,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(label: &str) -> RootSystem {
        RootSystem::from_label(label).unwrap()
    }

    #[test]
    fn interval_sizes_and_moebius() {
        let a1 = nc_interval(&rs("A1"));
        assert_eq!(a1.elements.len(), 2);
        let a2 = nc_interval(&rs("A2"));
        assert_eq!(a2.elements.len(), 5);
        let p = &a2.poset;
        assert!(p.is_graded_partial_order());
        assert_eq!(p.moebius(p.bottom().unwrap(), p.top().unwrap()), Ok(2));
        let a3 = nc_interval(&rs("A3"));
        assert_eq!(a3.elements.len(), 14);
        let q = &a3.poset;
        assert_eq!(q.moebius(q.bottom().unwrap(), q.top().unwrap()), Ok(-5));
    }

    #[test]
    fn lm_of_a2() {
        let l1 = build_lm(&rs("A2"), 1).unwrap();
        assert_eq!(l1.tuples.len(), 5);
        let l2 = build_lm(&rs("A2"), 2).unwrap();
        assert_eq!(l2.tuples.len(), 12);
        assert_eq!((0..12).filter(|&i| l2.poset.rank(i) == 2).count(), 5);
        assert_eq!((0..12).filter(|&i| l2.poset.rank(i) == 0).count(), 1);
        assert!(l2.is_downward_closed());
        assert!(l2.poset.is_graded_partial_order());
        assert!(build_lm(&rs("A2"), 0).is_err());
    }

    #[test]
    fn face_to_tuple_on_the_example_facet() {
        let cc = build_complex(&rs("A2"), 2).unwrap();
        let r = &cc.roots;
        let a = r.id_of_label("[0,1]:1").unwrap();
        let b = r.id_of_label("[1,0]:2").unwrap();
        let t = face_to_tuple(r, &[a, b]).unwrap();
        let sys = r.root_system();
        assert_eq!(t[0], GroupElement::reflection(sys, sys.simple_root(0)));
        assert_eq!(t[1], GroupElement::reflection(sys, sys.simple_root(1)));
        assert!(face_to_tuple(r, &[]).is_err());
        assert!(face_to_tuple(r, &[0]).is_err());
    }

    #[test]
    fn truncated_l2_is_an_antichain() {
        let l2 = build_lm(&rs("A2"), 2).unwrap();
        let (t, map) = l2.poset.truncate(1);
        let b = map.iter().position(|&i| i == l2.bottom()).unwrap();
        let oc = t.order_complex(&[b]);
        assert_eq!(oc.dim(), 0);
        assert_eq!(oc.facets().len(), 6);
    }

    #[test]
    fn homotopy_comparison_a2() {
        for m in 1..=2 {
            for k in 1..=2 {
                let c = homotopy_compare(&rs("A2"), m, k).unwrap();
                assert!(c.passed(), "m={m} k={k}: {c:?}");
            }
        }
        let c = homotopy_compare(&rs("A2"), 2, 2).unwrap();
        assert!(c.poset.is_wedge_of_spheres(2, 1));
        assert!(homotopy_compare(&rs("A2"), 2, 3).is_err());
    }
}
