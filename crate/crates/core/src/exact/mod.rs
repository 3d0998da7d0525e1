//! Exact scalars and dense linear algebra.

mod field;
mod mat;

pub use field::{rational_to_i64, Field, FieldSpec, Fp, Rationals};
pub use mat::{Echelon, Mat};
