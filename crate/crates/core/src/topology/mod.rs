//! Purity, shellings, integral homology, sphere counts, `k`-Cohen–Macaulay
//! audits and codimension-one incidence.

mod homology;
mod kcm;
mod shelling;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use homology::{homology, reduced_euler_characteristic, HomologyGroup, HomologyProfile};
pub use kcm::{is_cohen_macaulay, kcm_audit, CmCheck, FailureReason, KcmFailure, KcmMode, KcmReport};
pub use shelling::{
    construct_shelling, verify_shelling, ShellingCheck, ShellingOrder, StepCertificate, Witness,
    SHELLING_BUDGET,
};

use crate::colored_complex::build_complex;
use crate::complex::{k_subsets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::root_system::RootSystem;

pub fn check_pure(cx: &SimplicialComplex) -> bool {
    cx.is_pure()
}

pub fn dimension(cx: &SimplicialComplex) -> isize {
    cx.dim()
}

/// Histogram: number of facets containing a codimension-one face ↦ number
/// of such faces.
pub fn codim1_incidence(cx: &SimplicialComplex) -> Result<BTreeMap<usize, usize>> {
    if !cx.is_pure() {
        return Err(Error::NotPure);
    }
    let d = cx.facets()[0].len();
    if d == 0 {
        return Ok(BTreeMap::new());
    }
    let mut count: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for f in cx.facets() {
        for ridge in k_subsets(f, d - 1) {
            *count.entry(ridge).or_default() += 1;
        }
    }
    let mut hist = BTreeMap::new();
    for c in count.into_values() {
        *hist.entry(c).or_default() += 1;
    }
    Ok(hist)
}

/// `N^+(Φ, t) = ∏ (e_i + t·h − 1)/(e_i + 1)`, multiplied over the
/// irreducible components.
pub fn fuss_narayana_positive(rs: &RootSystem, t: usize) -> Result<BigRational> {
    let mut acc = BigRational::one();
    for c in rs.components() {
        let sub = if rs.is_irreducible() {
            rs.clone()
        } else {
            rs.parabolic_on(&c.simple)?
        };
        let num = sub.numerology()?;
        let h = num.coxeter_number;
        for &e in &num.exponents {
            let top = BigInt::from(e + t * h) - 1;
            acc *= BigRational::new(top, BigInt::from(e + 1));
        }
    }
    Ok(acc)
}

/// [`fuss_narayana_positive`] as an integer; a fractional value is an
/// error.
pub fn fuss_narayana_positive_integer(rs: &RootSystem, t: usize) -> Result<BigInt> {
    let q = fuss_narayana_positive(rs, t)?;
    if !q.is_integer() {
        return Err(Error::TheoremViolation(format!("N+({}, {t}) = {q} is not an integer", rs.label())));
    }
    Ok(q.to_integer())
}

/// Fuss–Catalan number `∏ (e_i + m·h + 1)/(e_i + 1)`, the facet count of
/// `Δ^m(Φ)`.
pub fn fuss_catalan(rs: &RootSystem, m: usize) -> Result<BigInt> {
    let mut acc = BigRational::one();
    for c in rs.components() {
        let sub = if rs.is_irreducible() {
            rs.clone()
        } else {
            rs.parabolic_on(&c.simple)?
        };
        let num = sub.numerology()?;
        for &e in &num.exponents {
            acc *= BigRational::new(BigInt::from(e + m * num.coxeter_number + 1), BigInt::from(e + 1));
        }
    }
    if !acc.is_integer() {
        return Err(Error::Internal("Fuss-Catalan number is fractional".into()));
    }
    Ok(acc.to_integer())
}

/// Homology free of rank `count` in degree `dim`, zero elsewhere.
pub fn verify_wedge(cx: &SimplicialComplex, count: usize, dim: isize) -> bool {
    homology(cx).is_wedge_of_spheres(count, dim)
}

/// Both sides of
/// `(−1)^{|I|−1} χ̃(Δ^m(Φ_I)) = Σ_{J ⊆ I} (−1)^{|J|−1} χ̃(Δ^m_+(Φ_J))`
/// for `I` the full set of simple roots.
pub fn inclusion_exclusion(rs: &RootSystem, m: usize) -> Result<(i64, i64)> {
    let n = rs.rank();
    let sign = |k: usize| if k % 2 == 1 { 1 } else { -1 };
    let whole = build_complex(rs, m)?;
    let lhs = sign(n) * reduced_euler_characteristic(&whole.complex);
    let mut rhs = 0i64;
    for mask in 0u32..(1 << n) {
        let keep: Vec<usize> = (0..n).filter(|k| mask & (1 << k) != 0).collect();
        let chi = if keep.is_empty() {
            -1
        } else {
            let sub = rs.parabolic_on(&keep)?;
            reduced_euler_characteristic(&build_complex(&sub, m)?.positive_part())
        };
        rhs += sign(keep.len()) * chi;
    }
    Ok((lhs, rhs))
}

/// Nonnegativity of an h-vector.
pub fn h_nonnegative(h: &[BigInt]) -> bool {
    h.iter().all(|x| *x >= BigInt::zero())
}
