use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not square")]
    NotSquare,
    #[error("diagonal entry a[{0}][{0}] = {1}, expected 2")]
    BadDiagonal(usize, i64),
    #[error("off-diagonal entry a[{0}][{1}] = {2} is positive")]
    PositiveOffDiagonal(usize, usize, i64),
    #[error("a[{0}][{1}] and a[{1}][{0}] disagree on being zero")]
    AsymmetricZero(usize, usize),
    #[error("matrix is not symmetrizable (cycle through entry a[{0}][{1}])")]
    NotSymmetrizable(usize, usize),
    #[error("Cartan matrix is not of affine type")]
    NotAffine,
    #[error("unknown type label {0:?}")]
    UnknownLabel(String),
    #[error("rank out of range for {0}")]
    RankOutOfRange(String),
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("vector has length {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid Coxeter word: {0}")]
    BadWord(String),
    #[error("{0} is not in -Pi or the positive roots")]
    NotAlmostPositive(String),
    #[error("{0} is not in Phi_c")]
    NotInPhiC(String),
    #[error("{0} is not a real root of the tube")]
    NotInTube(String),
    #[error("delta has no tube support")]
    DeltaHasNoTubeSupport,
    #[error("roots must be distinct")]
    NotDistinct,
    #[error("not a cluster: {0}")]
    NotACluster(String),
    #[error("root {0} is not in the cluster")]
    RootNotInCluster(String),
    #[error("delta cannot be exchanged for a single root")]
    DeltaNotExchangeable,
    #[error("search exhausted its bound: {0}")]
    SearchExhausted(String),
    #[error("fan rendering needs rank 3, got {0}")]
    RankNot3(usize),
    #[error("Laurent division was not exact")]
    NonExactDivision,
    #[error("cluster variable is not homogeneous")]
    NotHomogeneous,
    #[error("polynomial exceeded the term cap of {0}")]
    DepthTooDeep(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
