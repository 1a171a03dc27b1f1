use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("expected an odd prime, got {0}")]
    NotOddPrime(u64),
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("invalid discriminant {0}: {1}")]
    InvalidDiscriminant(i64, &'static str),
    #[error("level {0} is not supported here: {1}")]
    UnsupportedLevel(u64, &'static str),
    #[error("Kronecker condition fails: ({n}/{p}) = {symbol}, expected -1")]
    KroneckerCondition { n: i64, p: u64, symbol: i32 },
    #[error("singular curve (discriminant is zero)")]
    SingularCurve,
    #[error("the point [0:0:0] is not a projective point")]
    ZeroPoint,
    #[error("point is not on the curve")]
    PointNotOnCurve,
    #[error("curve coefficients must be integers for this operation")]
    NonIntegralModel,
    #[error("{0} is a prime of bad reduction")]
    BadReduction(u64),
    #[error("invalid quartic model: {0}")]
    InvalidQuartic(&'static str),
    #[error("enumeration of size {0} exceeds the limit of 10^7")]
    EnumerationTooLarge(u128),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coefficient table holds {have} terms but {need} are required")]
    TableTooShort { have: usize, need: usize },
    #[error("inconsistent deficiency rules at {place}: {detail}")]
    RuleConflict { place: String, detail: String },
    #[error("cache file {path}: {detail}")]
    Cache { path: PathBuf, detail: String },
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
