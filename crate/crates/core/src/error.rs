use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<usize>),
    #[error("invalid subset {0:?}: elements must be distinct integers in 1..=31")]
    InvalidSubset(Vec<usize>),
    #[error("invalid permutation {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("invalid subset chain {0:?}")]
    InvalidChain(Vec<Vec<usize>>),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("interval top must have even size, got {0}")]
    OddInterval(usize),
    #[error("{what} = {value} exceeds the limit {limit}")]
    OutOfBound { what: &'static str, value: usize, limit: usize },
    #[error("homology of (∅,[{n}]) is not concentrated in degree {}: ranks {ranks:?}", .n / 2)]
    NotConcentrated { n: usize, ranks: Vec<(usize, usize)> },
    #[error("series inversion needs constant term 1")]
    NonUnitConstant,
    #[error("torus elements need nonzero coordinates")]
    ZeroTorusEntry,
    #[error("invalid model point: {0}")]
    InvalidPoint(String),
    #[error("point does not satisfy the defining equations (pair {0} ⊆ {1})")]
    NotOnModel(String, String),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
