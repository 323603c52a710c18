use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::colored_complex::CompatibilityGraph;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A finite graded poset on `0..len` given by its full order relation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosetView {
    /// `up[i]` holds every `j` with `i ≤ j`.
    up: Vec<FixedBitSet>,
    rank: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PosetSummary {
    pub size: usize,
    pub rank: Vec<usize>,
    pub covers: Vec<Vec<usize>>,
}

impl PosetView {
    pub fn from_relation(n: usize, rank: Vec<usize>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let up = (0..n)
            .map(|i| {
                let mut s = FixedBitSet::with_capacity(n);
                for j in 0..n {
                    if leq(i, j) {
                        s.insert(j);
                    }
                }
                s
            })
            .collect();
        PosetView { up, rank }
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    pub fn rank(&self, i: usize) -> usize {
        self.rank[i]
    }

    /// Reflexive, antisymmetric, transitive, and rank strictly increasing
    /// along strict relations.
    pub fn is_graded_partial_order(&self) -> bool {
        let n = self.len();
        (0..n).all(|i| self.leq(i, i))
            && (0..n).all(|i| {
                self.up[i].ones().all(|j| {
                    (i == j || (!self.leq(j, i) && self.rank[i] < self.rank[j]))
                        && self.up[j].is_subset(&self.up[i])
                })
            })
    }

    /// The unique minimal element, if any.
    pub fn bottom(&self) -> Option<usize> {
        (0..self.len()).find(|&i| self.up[i].count_ones(..) == self.len())
    }

    /// The unique maximal element, if any.
    pub fn top(&self) -> Option<usize> {
        (0..self.len()).find(|&j| (0..self.len()).all(|i| self.leq(i, j)))
    }

    pub fn covers(&self, i: usize) -> Vec<usize> {
        self.up[i]
            .ones()
            .filter(|&j| j != i && self.up[i].ones().all(|z| z == i || z == j || !self.leq(z, j)))
            .collect()
    }

    pub fn summary(&self) -> PosetSummary {
        PosetSummary {
            size: self.len(),
            rank: self.rank.clone(),
            covers: (0..self.len()).map(|i| self.covers(i)).collect(),
        }
    }

    /// `μ(x, y)` by the defining recursion, memoized over the interval.
    pub fn moebius(&self, x: usize, y: usize) -> Result<i64> {
        if !self.leq(x, y) {
            return Err(Error::Invalid(format!("{x} and {y} are not comparable as x ≤ y")));
        }
        let mut interval: Vec<usize> = self.up[x].ones().filter(|&z| self.leq(z, y)).collect();
        interval.sort_by_key(|&z| self.rank[z]);
        let mut mu: HashMap<usize, i64> = HashMap::new();
        for &z in &interval {
            let v = if z == x {
                1
            } else {
                -interval
                    .iter()
                    .filter(|&&u| u != z && self.leq(u, z))
                    .map(|u| mu[u])
                    .sum::<i64>()
            };
            mu.insert(z, v);
        }
        Ok(mu[&y])
    }

    /// Elements of rank at most `k`, with the map back to this poset.
    pub fn truncate(&self, k: usize) -> (PosetView, Vec<usize>) {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| self.rank[i] <= k).collect();
        (self.restrict(&keep), keep)
    }

    /// The induced subposet on `keep`, in that order.
    pub fn restrict(&self, keep: &[usize]) -> PosetView {
        PosetView::from_relation(
            keep.len(),
            keep.iter().map(|&i| self.rank[i]).collect(),
            |a, b| self.leq(keep[a], keep[b]),
        )
    }

    /// The complex of chains of the elements outside `strip`.
    pub fn order_complex(&self, strip: &[usize]) -> SimplicialComplex {
        let mut allowed = FixedBitSet::with_capacity(self.len());
        allowed.insert_range(..);
        for &s in strip {
            allowed.remove(s);
        }
        if allowed.is_clear() {
            return SimplicialComplex::empty();
        }
        let g = CompatibilityGraph::from_predicate(self.len(), |i, j| self.leq(i, j) || self.leq(j, i));
        SimplicialComplex::new(g.maximal_cliques(&allowed))
    }
}
