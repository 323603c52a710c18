//! Exact scalar and matrix kernel.
//!
//! Nothing here uses floating point for decisions: linear algebra is
//! generic over [`Field`], and the root systems are realized over
//! [`QSqrt5`], which is exact for every supported type.

mod field;
mod matrix;
mod scalar;
mod smith;

pub use field::Field;
pub use matrix::{dot, reflect, reflection_matrix, Matrix};
pub use scalar::QSqrt5;
pub use smith::{smith_normal_form, smith_normal_form_sparse, IntegerRing, SmithForm, SparseRows};
