use thiserror::Error;

/// Errors raised by the curvature calculus.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {n} outside the supported range 1..={max}")]
    UnsupportedDimension { n: usize, max: usize },

    #[error("dimension {n} is too small, need at least {min}")]
    DimensionTooSmall { n: usize, min: usize },

    #[error("dimension {n} must be even")]
    OddDimension { n: usize },

    #[error("degree overflow: bidegree ({p},{q}) exceeds dimension {n}")]
    DegreeOverflow { p: usize, q: usize, n: usize },

    #[error("bidegree ({p},{q}) not valid for {op}")]
    InvalidBidegree {
        p: usize,
        q: usize,
        op: &'static str,
    },

    #[error("bidegree mismatch: ({p1},{q1}) vs ({p2},{q2})")]
    BidegreeMismatch {
        p1: usize,
        q1: usize,
        p2: usize,
        q2: usize,
    },

    #[error("{name} = {value} outside the admissible range {min}..={max}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("matrix is not symmetric (max asymmetry {asymmetry:e})")]
    NotSymmetric { asymmetry: f64 },

    #[error("not a curvature structure: {0}")]
    NotCurvatureStructure(String),

    #[error("σ₁ = {sigma1} is not positive")]
    NonPositiveScalar { sigma1: f64 },

    #[error("structure lies outside the Γ_{k} cone")]
    OutsideCone { k: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
