use thiserror::Error;

/// Errors raised by the exact-arithmetic and lattice-angle operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("expected a positive integer, got 0")]
    ZeroInput,

    #[error("expected a positive rational, got {0}")]
    NonPositive(String),

    #[error("expected a nonzero rational")]
    ZeroRational,

    #[error("{0} is not an odd prime")]
    NotOddPrime(String),

    #[error("{0} is not prime")]
    NotPrime(String),

    #[error("{what} = {value} exceeds the supported bound {bound}")]
    TooLarge {
        what: &'static str,
        value: String,
        bound: String,
    },

    #[error("zero vector is not allowed here")]
    ZeroVector,

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("dimension {got} is not supported here (expected {expected})")]
    BadDimension { got: usize, expected: &'static str },

    #[error("{0} is not a sum of three integer squares")]
    NotThreeSquare(String),

    #[error("angle is not in the lattice angle set for dimension {dim}")]
    OutsideTheta { dim: usize },

    #[error("operation requires an oblique angle (not 0, pi/2 or pi)")]
    DegenerateAngle,

    #[error("angle is not realizable against this vector (criterion fails at p = {prime})")]
    CriterionFails { prime: u64 },

    #[error("input not covered by this closed form: {0}")]
    UncoveredForm(String),

    #[error("search cap {cap} reached without a result")]
    SearchCap { cap: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;
