//! Exact linear algebra over ℚ and ℚ(i).

mod matrix;
mod rational;
mod scalar;
mod subspace;

pub use matrix::{dot, is_zero_vec, lift_vec, Matrix, Rref};
pub use scalar::{format_rational, int, parse_rational, rat, Field, GaussianRational, Gq, Rational};
pub use subspace::{unit, Subspace};
