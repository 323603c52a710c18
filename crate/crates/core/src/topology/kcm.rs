use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::homology::homology;
use super::shelling::construct_shelling;
use crate::complex::{k_subsets, SimplicialComplex};

/// Which subsets of vertices are removed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum KcmMode {
    Exhaustive,
    /// `count` random subsets of each size, drawn from a ChaCha stream.
    Sample { count: usize, seed: u64 },
}

/// How Cohen–Macaulayness of a restriction is decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CmCheck {
    /// Links of all faces have vanishing reduced homology below their
    /// dimension.
    Reisner,
    /// A shelling is found by vertex decomposition. Failure to find one
    /// is reported as not CM, so this mode can err on the strict side.
    Shelling,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FailureReason {
    Impure,
    DimensionDrop,
    NotCm,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct KcmFailure {
    pub removed: Vec<usize>,
    pub reason: FailureReason,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KcmReport {
    pub k: usize,
    pub mode: KcmMode,
    pub cm_check: CmCheck,
    pub subsets_examined: usize,
    pub failures: Vec<KcmFailure>,
}

impl KcmReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Cohen–Macaulay over `Z` by the link criterion: for every face `σ`,
/// `H̃_i(lk σ) = 0` for `i < dim lk σ`. Purity is checked first.
pub fn is_cohen_macaulay(cx: &SimplicialComplex) -> bool {
    if !cx.is_pure() {
        return false;
    }
    let d = cx.dim();
    cx.faces_by_size()
        .iter()
        .enumerate()
        // links of dimension ≤ 0 impose nothing on a pure complex
        .filter(|(s, _)| (*s as isize) < d)
        .all(|(_, level)| {
            level.iter().all(|f| {
                let lk = cx.link(f).expect("face of the complex");
                let top = lk.dim();
                homology(&lk)
                    .groups
                    .iter()
                    .all(|g| g.dim >= top || g.is_trivial())
            })
        })
}

fn classify(cx: &SimplicialComplex, removed: &[usize], check: CmCheck) -> Option<FailureReason> {
    let keep: Vec<usize> = cx
        .vertices()
        .into_iter()
        .filter(|v| removed.binary_search(v).is_err())
        .collect();
    let sub = cx.induced(&keep);
    if !sub.is_pure() {
        return Some(FailureReason::Impure);
    }
    if sub.dim() != cx.dim() {
        return Some(FailureReason::DimensionDrop);
    }
    let cm = match check {
        CmCheck::Reisner => is_cohen_macaulay(&sub),
        CmCheck::Shelling => construct_shelling(&sub, &keep).is_ok(),
    };
    (!cm).then_some(FailureReason::NotCm)
}

/// Audits `k`-Cohen–Macaulayness: every restriction to `V \ B` with
/// `|B| ≤ k − 1` must be pure, of the same dimension and CM.
pub fn kcm_audit(cx: &SimplicialComplex, k: usize, mode: KcmMode, check: CmCheck) -> KcmReport {
    let verts = cx.vertices();
    let max = k.saturating_sub(1).min(verts.len());
    let mut subsets: BTreeSet<Vec<usize>> = BTreeSet::new();
    match mode {
        KcmMode::Exhaustive => {
            for size in 0..=max {
                subsets.extend(k_subsets(&verts, size));
            }
        }
        KcmMode::Sample { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            subsets.insert(Vec::new());
            for size in 1..=max {
                for _ in 0..count {
                    let mut b: Vec<usize> = sample(&mut rng, verts.len(), size)
                        .into_iter()
                        .map(|i| verts[i])
                        .collect();
                    b.sort_unstable();
                    subsets.insert(b);
                }
            }
        }
    }
    let subsets: Vec<Vec<usize>> = subsets.into_iter().collect();
    let mut failures: Vec<KcmFailure> = subsets
        .par_iter()
        .filter_map(|b| {
            classify(cx, b, check).map(|reason| KcmFailure {
                removed: b.clone(),
                reason,
            })
        })
        .collect();
    failures.sort_by(|a, b| {
        a.removed
            .len()
            .cmp(&b.removed.len())
            .then_with(|| a.removed.cmp(&b.removed))
    });
    KcmReport {
        k,
        mode,
        cm_check: check,
        subsets_examined: subsets.len(),
        failures,
    }
}
