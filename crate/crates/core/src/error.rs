use thiserror::Error;

/// Errors shared by the combinatorial and numerical layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: char, rank: usize },
    #[error("simple-root index {index} out of range 1..={rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("theta must omit at least one simple root (P = G gives a point)")]
    ThetaIsFull,
    #[error("bundle vectors are based over different parabolic data")]
    MismatchedBase,
    #[error("expected length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("Sasaki datum requires strictly positive coefficients, got {0}")]
    NonPositiveCoefficient(i64),
    #[error("numeric charts exist only in type A; {0} is combinatorial-only")]
    CombinatorialOnly(String),
    #[error("wedge degree {k} out of range 1..={n}")]
    WedgeDegree { k: usize, n: usize },
    #[error("parameter b must be nonzero")]
    ZeroB,
    #[error("tau must have nonzero imaginary part")]
    RealTau,
    #[error("Hermitian form is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is singular")]
    Singular,
    #[error("determinant not within tolerance of 1")]
    NotUnimodular,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
