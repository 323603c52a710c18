//! Permutations of `{0, …, n-1}`, used as an independent model of the
//! type `A_{n-1}` reflection group.

use std::fmt;

use super::GroupElement;
use crate::error::{Error, Result};
use crate::exact_algebra::QSqrt5;
use crate::root_system::{CartanType, RootSystem};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("not a permutation: {images:?}")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of `{0..n}` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x >= n {
                    return Err(Error::Invalid(format!("{x} out of range")));
                }
                images[x] = c[(k + 1) % c.len()];
            }
        }
        Permutation::new(images)
    }

    /// The transposition exchanging `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            inv[p] = i;
        }
        Permutation { images: inv }
    }

    /// All cycles including fixed points, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.images[x];
            }
            out.push(cyc);
        }
        out
    }

    /// Reflection length in `S_n`: `n` minus the number of cycles.
    pub fn absolute_length(&self) -> usize {
        self.images.len() - self.cycles().len()
    }

    /// The bipartite Coxeter element of `A_{n-1}`: the product of the odd
    /// adjacent transpositions `(1 2)(3 4)⋯` followed by the even ones.
    pub fn bipartite_coxeter(n: usize) -> Permutation {
        let odd = (0..n.saturating_sub(1)).step_by(2);
        let even = (1..n.saturating_sub(1)).step_by(2);
        odd.chain(even).fold(Permutation::identity(n), |acc, i| {
            acc.compose(&Permutation::transposition(n, i, i + 1))
        })
    }

    /// `u ≼ w` in `S_n`: every cycle of `u` is a cycle of `w` with some
    /// entries deleted, and the cycles of `u` inside one cycle of `w` form
    /// a noncrossing partition of that cycle in its cyclic order.
    pub fn noncrossing_leq(u: &Permutation, w: &Permutation) -> bool {
        if u.degree() != w.degree() {
            return false;
        }
        let wc = w.cycles();
        let mut which = vec![(0, 0); w.degree()];
        for (c, cyc) in wc.iter().enumerate() {
            for (pos, &x) in cyc.iter().enumerate() {
                which[x] = (c, pos);
            }
        }
        let mut blocks: Vec<Vec<Vec<usize>>> = vec![Vec::new(); wc.len()];
        for cyc in u.cycles() {
            let c = which[cyc[0]].0;
            if cyc.iter().any(|&x| which[x].0 != c) {
                return false;
            }
            if !follows_cyclic_order(&cyc, |x| which[x].1) {
                return false;
            }
            blocks[c].push(cyc.iter().map(|&x| which[x].1).collect());
        }
        blocks.iter().all(|b| is_noncrossing(b))
    }

    /// The criterion without the noncrossing condition: each cycle of `u`
    /// is obtained from a cycle of `w` by deleting entries. This is weaker
    /// than `u ≼ w`; `(1 3)(2 4)` passes it against `(1 2 3 4)`.
    pub fn cycle_deletion_leq(u: &Permutation, w: &Permutation) -> bool {
        if u.degree() != w.degree() {
            return false;
        }
        let mut which = vec![(0, 0); w.degree()];
        for (c, cyc) in w.cycles().iter().enumerate() {
            for (pos, &x) in cyc.iter().enumerate() {
                which[x] = (c, pos);
            }
        }
        u.cycles().iter().all(|cyc| {
            cyc.iter().all(|&x| which[x].0 == which[cyc[0]].0)
                && follows_cyclic_order(cyc, |x| which[x].1)
        })
    }
}

/// Whether the cycle visits its entries in increasing cyclic position.
fn follows_cyclic_order(cyc: &[usize], pos: impl Fn(usize) -> usize) -> bool {
    let p: Vec<usize> = cyc.iter().map(|&x| pos(x)).collect();
    let descents = (0..p.len()).filter(|&i| p[i] > p[(i + 1) % p.len()]).count();
    p.len() <= 1 || descents == 1
}

/// Blocks of positions on a circle are noncrossing when no `a < b < c < d`
/// has `a, c` in one block and `b, d` in another.
fn is_noncrossing(blocks: &[Vec<usize>]) -> bool {
    let mut owner = std::collections::BTreeMap::new();
    for (k, b) in blocks.iter().enumerate() {
        for &x in b {
            owner.insert(x, k);
        }
    }
    let pts: Vec<(usize, usize)> = owner.into_iter().collect();
    let n = pts.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let (ka, kb, kc, kd) = (pts[a].1, pts[b].1, pts[c].1, pts[d].1);
                    if ka == kc && kb == kd && ka != kb {
                        return false;
                    }
                }
            }
        }
    }
    true
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<Vec<usize>> =
            self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            let body: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", body.join(" "))?;
        }
        Ok(())
    }
}

/// The element of `W(A_{n-1})` acting on coordinates as `σ`, for a system
/// realized in `R^n` with roots `e_i − e_j`.
pub fn element_of_permutation(rs: &RootSystem, sigma: &Permutation) -> Result<GroupElement> {
    let n = sigma.degree();
    if !rs.is_irreducible() || rs.components()[0].cartan != CartanType::A(n - 1) {
        return Err(Error::DimensionMismatch(format!(
            "permutation of degree {n} does not act on {}",
            rs.label()
        )));
    }
    let perm: Option<Vec<u16>> = (0..rs.num_roots())
        .map(|r| {
            let v = rs.root(r).coords()?;
            let mut img = vec![QSqrt5::from_integer(0); n];
            for (i, x) in v.iter().enumerate() {
                img[sigma.apply(i)] = x.clone();
            }
            rs.index_of_coords(&img).map(|k| k as u16)
        })
        .collect();
    perm.map(GroupElement::from_perm)
        .ok_or_else(|| Error::Internal("root image not found".into()))
}
