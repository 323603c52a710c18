//! Property checks driven by proptest runners with fixed seeds, shared by
//! the `properties` and `acceptance` targets.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use gencluster::colored_complex::{build_complex, ClusterComplex};
use gencluster::complex::SimplicialComplex;
use gencluster::coxeter::check_exponents_by_eigenvalues;
use gencluster::exact_algebra::{smith_normal_form, Matrix};
use gencluster::root_system::RootSystem;
use gencluster::topology::{fuss_catalan, h_nonnegative, inclusion_exclusion};

pub const SEED: [u8; 32] = *b"generalized-cluster-complex-seed";

pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &SEED))
}

pub const CASES: &[(&str, usize)] = &[
    ("A2", 1),
    ("A2", 3),
    ("A3", 2),
    ("B2", 2),
    ("B3", 1),
    ("B3", 2),
    ("G2", 3),
    ("I2(5)", 2),
    ("H3", 1),
    ("D4", 1),
    ("A1xA2", 2),
];

pub fn complexes() -> &'static [(RootSystem, ClusterComplex)] {
    static CACHE: OnceLock<Vec<(RootSystem, ClusterComplex)>> = OnceLock::new();
    CACHE.get_or_init(|| {
        CASES
            .iter()
            .map(|&(l, m)| {
                let rs = RootSystem::from_label(l).expect("known type");
                let cc = build_complex(&rs, m).expect("builds");
                (rs, cc)
            })
            .collect()
    })
}

fn report<T: std::fmt::Debug>(r: Result<(), proptest::test_runner::TestError<T>>) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

/// Every `R_m` orbit meets the negative simple roots within the bound, and
/// `R_m` is a permutation of the vertex set.
pub fn orbit_exhaustion(cases: u32) -> Result<(), String> {
    let all = complexes();
    let strat = (0..all.len()).prop_flat_map(move |i| (Just(i), 0..all[i].1.roots.len()));
    report(runner(cases).run(&strat, |(i, v)| {
        let roots = &all[i].1.roots;
        let mut x = v;
        let mut hit = roots.is_negative_simple(x);
        let mut steps = 0;
        loop {
            x = roots.rm_map(x);
            steps += 1;
            hit |= roots.is_negative_simple(x);
            if x == v || steps > roots.len() {
                break;
            }
        }
        prop_assert_eq!(x, v, "orbit of {} does not close", roots.label(v));
        prop_assert!(hit, "orbit of {} misses -Π", roots.label(v));
        prop_assert!(steps <= roots.orbit_bound());
        let image: BTreeSet<usize> = (0..roots.len()).map(|u| roots.rm_map(u)).collect();
        prop_assert_eq!(image.len(), roots.len());
        Ok(())
    }))
}

/// Compatibility is invariant under `R_m`.
pub fn rm_equivariance(cases: u32) -> Result<(), String> {
    let all = complexes();
    let strat = (0..all.len()).prop_flat_map(move |i| {
        let n = all[i].1.roots.len();
        (Just(i), 0..n, 0..n)
    });
    report(runner(cases).run(&strat, |(i, a, b)| {
        prop_assume!(a != b);
        let cc = &all[i].1;
        let (ra, rb) = (cc.roots.rm_map(a), cc.roots.rm_map(b));
        prop_assert_eq!(cc.graph.has_edge(a, b), cc.graph.has_edge(ra, rb));
        Ok(())
    }))
}

fn small_complex(offset: usize) -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(0..6usize, 1..4), 1..5).prop_map(move |fs| {
        SimplicialComplex::new(
            fs.into_iter()
                .map(|f| f.into_iter().map(|v| v + offset).collect::<Vec<_>>()),
        )
    })
}

fn convolve(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Face counts of a join, indexed by face size, are the convolution of
/// the factors' counts.
pub fn join_convolution(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&(small_complex(0), small_complex(10)), |(a, b)| {
        let j = a.join(&b).expect("disjoint vertex sets");
        prop_assert_eq!(j.f_vector(), convolve(&a.f_vector(), &b.f_vector()));
        Ok(())
    }))
}

/// Links of faces of `Δ^m(Φ)` and of its positive part have nonnegative
/// h-vectors summing to their facet counts.
pub fn h_vector_nonnegative(cases: u32) -> Result<(), String> {
    let all = complexes();
    let strat = (0..all.len(), any::<bool>(), any::<prop::sample::Index>(), any::<u8>());
    report(runner(cases).run(&strat, |(i, positive, pick, mask)| {
        let cc = &all[i].1;
        let cx = if positive { cc.positive_part() } else { cc.complex.clone() };
        let facet = &cx.facets()[pick.index(cx.facets().len())];
        let face: Vec<usize> = facet
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &v)| v)
            .collect();
        let link = cx.link(&face).expect("face of the complex");
        let h = link.h_vector();
        prop_assert!(h_nonnegative(&h), "h = {:?}", h);
        prop_assert_eq!(h.iter().sum::<BigInt>(), BigInt::from(link.facets().len()));
        Ok(())
    }))
}

/// Smith normal form: positive factors in a divisibility chain, as many as
/// the rational rank, and unchanged by transposition.
pub fn smith_divisibility(cases: u32) -> Result<(), String> {
    let strat = (1..6usize, 1..6usize)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r));
    report(runner(cases).run(&strat, |rows| {
        let m = Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .expect("rectangular");
        let snf = smith_normal_form(&m);
        prop_assert!(snf.factors.iter().all(|d| *d > BigInt::from(0)));
        for w in snf.factors.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], BigInt::from(0), "{:?}", snf.factors);
        }
        let q: Matrix<BigRational> = m.map(|x| BigRational::from_integer(x.clone()));
        prop_assert_eq!(snf.rank, q.rank());
        prop_assert_eq!(snf.factors.len(), snf.rank);
        prop_assert_eq!(smith_normal_form(&m.transpose()).factors, snf.factors);
        Ok(())
    }))
}

/// Fixed spaces of powers of `γ` match the exponents, and the Fuss-Catalan
/// product equals the facet count.
pub fn numerology(cases: u32) -> Result<(), String> {
    let all = complexes();
    report(runner(cases).run(&(0..all.len()), |i| {
        let (rs, cc) = &all[i];
        prop_assume!(rs.is_irreducible());
        prop_assert!(check_exponents_by_eigenvalues(rs).expect("irreducible"));
        let want = fuss_catalan(rs, cc.roots.m()).expect("irreducible");
        prop_assert_eq!(want, BigInt::from(cc.complex.facets().len()));
        Ok(())
    }))
}

/// The Euler characteristic identity over parabolic subsystems.
pub fn inclusion_exclusion_identity(cases: u32) -> Result<(), String> {
    let strat = (prop::sample::select(vec!["A3", "B3"]), 1..=3usize);
    report(runner(cases).run(&strat, |(label, m)| {
        let rs = RootSystem::from_label(label).expect("known type");
        let (lhs, rhs) = inclusion_exclusion(&rs, m).expect("builds");
        prop_assert_eq!(lhs, rhs);
        Ok(())
    }))
}

pub type Property = (&'static str, fn(u32) -> Result<(), String>, u32);

pub const PROPERTIES: &[Property] = &[
    ("orbit exhaustion under R_m", orbit_exhaustion, 128),
    ("R_m equivariance", rm_equivariance, 256),
    ("join f-vector convolution", join_convolution, 128),
    ("h-vector nonnegativity", h_vector_nonnegative, 96),
    ("Smith normal form divisibility", smith_divisibility, 128),
    ("exponents by eigenvalues", numerology, 24),
    ("inclusion-exclusion A3/B3", inclusion_exclusion_identity, 8),
];
