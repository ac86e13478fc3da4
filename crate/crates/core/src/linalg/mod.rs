//! Exact dense linear algebra over `Q` and `F_p`.

mod matrix;
mod scalar;

pub use matrix::{ExactMatrix, Rref};
pub use scalar::{FieldSpec, Scalar};
