//! Arithmetic in F_p and F_{p^m}: tables, traces, quadratic characters and
//! minimal polynomials.

mod field;
mod poly;

pub use field::{nth_irreducible, FieldElement, FieldOptions, FiniteField};
pub use poly::Polynomial;

pub use crate::arith::v2;
