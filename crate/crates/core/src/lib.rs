//! Exact linear algebra of generalized complex structures.
//!
//! A generalized complex structure on a real vector space `V` is handled in
//! three interchangeable forms: an orthogonal automorphism `J` of `V ⊕ V*`
//! with `J² = -1` ([`GcAut`]), its `+i` eigenspace `E ⊂ V_ℂ ⊕ V_ℂ*`
//! ([`IsotropicE`]), and a pure spinor line in `⋀V_ℂ*` ([`SpinorLine`]).
//! All arithmetic is exact over ℚ and ℚ(i).

pub mod classification;
mod error;
pub mod gcs;
pub mod json;
pub mod linalg;
pub mod random;
pub mod relations;
pub mod selftest;
pub mod spinor;
pub mod subspaces;
pub mod transforms;

pub use error::{GcError, Result};
pub use gcs::{BiVector, GcAut, IsotropicE, PhaseSpace, TwoForm};
pub use spinor::{Multivector, SpinorLine, StandardForm};
