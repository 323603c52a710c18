//! The ρ-sequence of a bipartite Coxeter element and the induced total
//! order on the almost positive roots.

use std::collections::HashSet;

use super::GroupElement;
use crate::error::{Error, Result};
use crate::root_system::RootSystem;

/// `ρ_i = R(α_{c_1}) ⋯ R(α_{c_{i-1}})(α_{c_i})` for `i = 1..=2N`, where
/// `c` repeats the Coxeter order of one irreducible component. Indices
/// are read modulo `2N`, so `ρ_{-i} = ρ_{2N-i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RhoSequence {
    pub rank: usize,
    pub split: usize,
    pub num_positive: usize,
    values: Vec<usize>,
}

impl RhoSequence {
    /// `ρ_i` for any integer `i`, reduced modulo `2N`.
    pub fn get(&self, i: isize) -> usize {
        let len = self.values.len() as isize;
        let k = (i - 1).rem_euclid(len);
        self.values[k as usize]
    }

    /// `ρ_1, …, ρ_{2N}`.
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// The window `ρ_{-(n-s)+1}, …, ρ_{N+s}`, which lists every almost
    /// positive root of the component once.
    pub fn window(&self) -> Vec<usize> {
        let lo = -(self.rank as isize - self.split as isize) + 1;
        let hi = (self.num_positive + self.split) as isize;
        (lo..=hi).map(|i| self.get(i)).collect()
    }
}

/// ρ-sequence of an irreducible system.
pub fn rho_sequence(rs: &RootSystem) -> Result<RhoSequence> {
    if !rs.is_irreducible() {
        return Err(Error::Reducible { op: "rho_sequence" });
    }
    rho_sequence_of_component(rs, 0)
}

/// ρ-sequence of one irreducible component, checked against the identities
/// `{ρ_1..ρ_N} = Φ+`, `{ρ_{N+1}..ρ_{N+s}} = −Π+` and
/// `{ρ_0, ρ_{-1}, …, ρ_{-(n-s)+1}} = −Π−`.
pub fn rho_sequence_of_component(rs: &RootSystem, comp: usize) -> Result<RhoSequence> {
    let c = &rs.components()[comp];
    let n = c.simple.len();
    let np = c.positive.len();
    let order: Vec<usize> = c
        .simple
        .iter()
        .copied()
        .filter(|&k| rs.is_plus(k))
        .chain(c.simple.iter().copied().filter(|&k| !rs.is_plus(k)))
        .collect();
    let s = c.simple.iter().filter(|&&k| rs.is_plus(k)).count();
    let mut prefix = GroupElement::identity(rs);
    let mut values = Vec::with_capacity(2 * np);
    for i in 0..2 * np {
        let alpha = rs.simple_root(order[i % n]);
        values.push(prefix.apply(alpha));
        prefix = prefix.compose(&GroupElement::reflection(rs, alpha));
    }
    let seq = RhoSequence {
        rank: n,
        split: s,
        num_positive: np,
        values,
    };

    let set = |range: std::ops::RangeInclusive<isize>| -> HashSet<usize> {
        range.map(|i| seq.get(i)).collect()
    };
    let positive: HashSet<usize> = c.positive.iter().copied().collect();
    let neg = |plus: bool| -> HashSet<usize> {
        c.simple
            .iter()
            .filter(|&&k| rs.is_plus(k) == plus)
            .map(|&k| rs.negate(rs.simple_root(k)))
            .collect()
    };
    let np_i = np as isize;
    let ok = set(1..=np_i) == positive
        && set(np_i + 1..=np_i + s as isize) == neg(true)
        && set(-(n as isize - s as isize) + 1..=0) == neg(false)
        && seq.window().len() == np + n;
    if !ok {
        return Err(Error::Internal(format!(
            "ρ-sequence identities fail for component {comp} of {}",
            rs.label()
        )));
    }
    Ok(seq)
}

/// The total order on the almost positive roots of one component:
/// `ρ_{2N-(n-s)+1}, …, ρ_{2N}, ρ_1, …, ρ_{N+s}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TotalOrder {
    order: Vec<usize>,
}

impl TotalOrder {
    pub fn roots(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, root: usize) -> Option<usize> {
        self.order.iter().position(|&r| r == root)
    }
}

pub fn total_order(rs: &RootSystem) -> Result<TotalOrder> {
    Ok(TotalOrder {
        order: rho_sequence(rs)?.window(),
    })
}

/// Sort keys `(component, position)` for every almost positive root of a
/// possibly reducible system; `None` for roots that are not almost
/// positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderKeys {
    keys: Vec<Option<(usize, usize)>>,
    per_component: Vec<TotalOrder>,
}

impl OrderKeys {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let mut keys = vec![None; rs.num_roots()];
        let mut per_component = Vec::new();
        for c in 0..rs.components().len() {
            let order = rho_sequence_of_component(rs, c)?.window();
            for (pos, &r) in order.iter().enumerate() {
                keys[r] = Some((c, pos));
            }
            per_component.push(TotalOrder { order });
        }
        Ok(OrderKeys { keys, per_component })
    }

    pub fn key(&self, root: usize) -> Option<(usize, usize)> {
        self.keys[root]
    }

    pub fn component_orders(&self) -> &[TotalOrder] {
        &self.per_component
    }

    /// All almost positive roots, component by component.
    pub fn roots(&self) -> Vec<usize> {
        self.per_component
            .iter()
            .flat_map(|o| o.order.iter().copied())
            .collect()
    }

    /// Sorts root indices by their keys.
    pub fn sort(&self, roots: &mut [usize]) {
        roots.sort_by_key(|&r| self.keys[r]);
    }
}
