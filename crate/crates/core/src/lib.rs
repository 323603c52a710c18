//! Exact construction of generalized cluster complexes `Δ^m(Φ)` and their
//! positive parts for finite root systems, together with the machinery to
//! check their topology: purity, shellings, integral homology, higher
//! Cohen–Macaulay connectivity and the comparison with generalized
//! noncrossing partitions.
//!
//! All arithmetic is exact. Linear algebra is generic over a scalar
//! [`Field`](exact_algebra::Field); root systems are realized over
//! [`Scalar`] = `Q(√5)`, which covers every supported type.

pub mod colored_complex;
pub mod complex;
pub mod coxeter;
pub mod error;
pub mod exact_algebra;
pub mod noncrossing;
pub mod root_system;
pub mod topology;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};

/// The ambient scalar field of every realized root system.
pub type Scalar = exact_algebra::QSqrt5;
/// Matrices over the ambient scalar field.
pub type ScalarMatrix = exact_algebra::Matrix<Scalar>;
/// Matrices over the rationals.
pub type RationalMatrix = exact_algebra::Matrix<BigRational>;
/// Integer matrices, as used for boundary maps.
pub type IntMatrix = exact_algebra::Matrix<BigInt>;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
