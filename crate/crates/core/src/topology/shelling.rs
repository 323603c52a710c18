use std::collections::HashMap;

use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};

/// For `i < k`: `σ_i ∩ σ_k ⊆ σ_j ∩ σ_k = σ_k \ {v}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub v: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StepCertificate {
    pub k: usize,
    /// Vertices `v` of `σ_k` with `σ_k \ {v}` in an earlier facet.
    pub restriction: Vec<usize>,
    pub witnesses: Vec<Witness>,
}

/// A facet order with its per-step certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ShellingOrder {
    pub facets: Vec<Face>,
    pub steps: Vec<StepCertificate>,
}

/// Outcome of checking a facet order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ShellingCheck {
    Valid(ShellingOrder),
    /// Step `k` fails against the earlier facet `i`.
    Invalid { k: usize, i: usize },
}

impl ShellingCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, ShellingCheck::Valid(_))
    }
}

/// Checks the shelling condition for every pair `i < k`. The order must
/// list the facets of the pure complex `cx` exactly once.
pub fn verify_shelling(cx: &SimplicialComplex, order: &[Face]) -> Result<ShellingCheck> {
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    let order: Vec<Face> = order
        .iter()
        .map(|f| {
            let mut f = f.clone();
            f.sort_unstable();
            f
        })
        .collect();
    let mut sorted = order.clone();
    sorted.sort();
    if sorted != cx.facets() {
        return Err(Error::Invalid("order is not a permutation of the facets".into()));
    }
    let mut steps = Vec::with_capacity(order.len());
    for (k, fk) in order.iter().enumerate() {
        // earlier facet meeting σ_k in σ_k \ {v}, for each available v
        let mut restriction = Vec::new();
        let mut source = HashMap::new();
        for (j, fj) in order[..k].iter().enumerate() {
            let missing: Vec<usize> = fk.iter().copied().filter(|v| fj.binary_search(v).is_err()).collect();
            if missing.len() == 1 && !source.contains_key(&missing[0]) {
                source.insert(missing[0], j);
                restriction.push(missing[0]);
            }
        }
        restriction.sort_unstable();
        let mut witnesses = Vec::with_capacity(k);
        for (i, fi) in order[..k].iter().enumerate() {
            // need v ∈ σ_k \ σ_i with σ_k \ {v} already covered
            let found = fk
                .iter()
                .copied()
                .filter(|v| fi.binary_search(v).is_err())
                .find(|v| source.contains_key(v));
            match found {
                Some(v) => witnesses.push(Witness { i, j: source[&v], v }),
                None => return Ok(ShellingCheck::Invalid { k, i }),
            }
        }
        steps.push(StepCertificate {
            k,
            restriction,
            witnesses,
        });
    }
    Ok(ShellingCheck::Valid(ShellingOrder {
        facets: order,
        steps,
    }))
}

/// Recursion budget for [`construct_shelling`].
pub const SHELLING_BUDGET: usize = 200_000;

/// Builds a shelling by vertex decomposition: pick a shedding vertex `v`
/// with `Δ \ v` pure of full dimension, shell `Δ \ v`, then append the
/// cone over a shelling of `lk v`. Vertices are tried in the order given
/// by `ranking` (extremes first: its first element, its last element, then
/// the rest); vertices absent from the ranking are tried afterwards. The
/// result is re-checked with [`verify_shelling`].
pub fn construct_shelling(cx: &SimplicialComplex, ranking: &[usize]) -> Result<ShellingOrder> {
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    let mut search = Search {
        ranking: candidate_order(ranking),
        memo: HashMap::new(),
        calls: 0,
    };
    let order = search
        .shell(cx)?
        .ok_or(Error::ShellingFailed {
            facets: cx.facets().len(),
        })?;
    match verify_shelling(cx, &order)? {
        ShellingCheck::Valid(cert) => Ok(cert),
        ShellingCheck::Invalid { k, i } => Err(Error::Internal(format!(
            "constructed order fails at step {k} against {i}"
        ))),
    }
}

fn candidate_order(ranking: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(ranking.len());
    if let Some(&first) = ranking.first() {
        out.push(first);
    }
    if ranking.len() > 1 {
        out.push(ranking[ranking.len() - 1]);
        out.extend_from_slice(&ranking[1..ranking.len() - 1]);
    }
    out
}

struct Search {
    ranking: Vec<usize>,
    memo: HashMap<SimplicialComplex, Option<Vec<Face>>>,
    calls: usize,
}

impl Search {
    fn shell(&mut self, cx: &SimplicialComplex) -> Result<Option<Vec<Face>>> {
        if cx.facets().len() == 1 {
            return Ok(Some(cx.facets().to_vec()));
        }
        if let Some(hit) = self.memo.get(cx) {
            return Ok(hit.clone());
        }
        self.calls += 1;
        if self.calls > SHELLING_BUDGET {
            return Err(Error::ShellingFailed {
                facets: cx.facets().len(),
            });
        }
        let verts = cx.vertices();
        let mut cands: Vec<usize> = self
            .ranking
            .iter()
            .copied()
            .filter(|v| verts.binary_search(v).is_ok())
            .collect();
        let ranked: std::collections::HashSet<usize> = cands.iter().copied().collect();
        cands.extend(verts.iter().copied().filter(|v| !ranked.contains(v)));

        let size = cx.facets()[0].len();
        let mut result = None;
        for v in cands {
            let link = cx.link(&[v])?;
            if cx.is_cone_point(v) {
                result = self.shell(&link)?.map(|s| cone(&s, v));
                break;
            }
            let del = cx.deletion(v);
            if !del.facets().iter().all(|f| f.len() == size) {
                continue;
            }
            let Some(sd) = self.shell(&del)? else { continue };
            let Some(sl) = self.shell(&link)? else { continue };
            let mut order = sd;
            order.extend(cone(&sl, v));
            result = Some(order);
            break;
        }
        self.memo.insert(cx.clone(), result.clone());
        Ok(result)
    }
}

fn cone(order: &[Face], v: usize) -> Vec<Face> {
    order
        .iter()
        .map(|f| {
            let mut g = f.clone();
            g.push(v);
            g.sort_unstable();
            g
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pentagon() -> SimplicialComplex {
        SimplicialComplex::new((0..5).map(|i| vec![i, (i + 1) % 5]))
    }

    #[test]
    fn simplex_orders_are_shellings() {
        let s = SimplicialComplex::simplex(vec![0, 1, 2]);
        assert!(verify_shelling(&s, s.facets()).unwrap().is_valid());
    }

    #[test]
    fn pentagon_orders() {
        let p = pentagon();
        let around: Vec<Face> = (0..5).map(|i| {
            let mut f = vec![i, (i + 1) % 5];
            f.sort();
            f
        }).collect();
        assert!(verify_shelling(&p, &around).unwrap().is_valid());
        // {0,1} then {2,3}: disconnected prefix
        let bad = vec![vec![0, 1], vec![2, 3], vec![1, 2], vec![3, 4], vec![0, 4]];
        assert_eq!(verify_shelling(&p, &bad).unwrap(), ShellingCheck::Invalid { k: 1, i: 0 });
        let built = construct_shelling(&p, &[]).unwrap();
        assert_eq!(built.facets.len(), 5);
    }

    #[test]
    fn errors_and_failures() {
        let mixed = SimplicialComplex::new(vec![vec![0, 1], vec![2]]);
        assert_eq!(verify_shelling(&mixed, mixed.facets()), Err(Error::NotPure));
        let p = pentagon();
        assert!(verify_shelling(&p, &p.facets()[..4]).is_err());
        // two disjoint edges are not shellable
        let two = SimplicialComplex::new(vec![vec![0, 1], vec![2, 3]]);
        assert!(matches!(construct_shelling(&two, &[]), Err(Error::ShellingFailed { .. })));
    }

    #[test]
    fn certificate_records_restrictions() {
        let p = pentagon();
        let cert = construct_shelling(&p, &[0, 1, 2, 3, 4]).unwrap();
        assert!(cert.steps[0].restriction.is_empty());
        assert_eq!(cert.steps.last().unwrap().restriction.len(), 2);
    }
}
