use thiserror::Error;

use crate::gcs::Equation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GcError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("not a generalized complex structure: {}", labels(.0))]
    InvalidStructure(Vec<Equation>),

    #[error("invalid eigenspace: {0}")]
    InvalidEigenspace(&'static str),

    #[error("not skew-symmetric: {0}")]
    NotSkew(&'static str),

    #[error("singular map: {0}")]
    Singular(&'static str),

    #[error("not a complex structure (J^2 != -1)")]
    NotComplexStructure,

    #[error("spinor is zero")]
    ZeroSpinor,

    #[error("spinor is not pure")]
    NotPure,

    #[error("odd dimension {0}")]
    OddDimension(usize),

    #[error("operation not applicable: {0}")]
    NotApplicable(&'static str),

    #[error("operator violates omega(u,Tv) = omega(Tu,v)")]
    StarViolated,

    #[error("structures differ outside the (1,2) block")]
    BlocksDiffer,

    #[error("no bivector transforms one structure into the other")]
    NoValidBeta,

    #[error("subspace is not split by the given complement")]
    NotSplit,

    #[error("unsupported structure type: {0}")]
    Unsupported(&'static str),

    #[error("internal cross-check failed: {0}")]
    CrossCheck(&'static str),

    #[error("malformed input: {0}")]
    Parse(String),
}

fn labels(eqs: &[Equation]) -> String {
    eqs.iter().map(|e| e.describe()).collect::<Vec<_>>().join("; ")
}

pub type Result<T> = std::result::Result<T, GcError>;
