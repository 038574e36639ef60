use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("illegal rank {rank} for Dynkin type {ty}")]
    IllegalRank { ty: char, rank: usize },

    #[error("unknown vertex label `{0}`")]
    UnknownVertex(String),

    #[error("vector of length {got} does not match {expected} vertices")]
    IndexMismatch { expected: usize, got: usize },

    #[error("dimension vectors differ: {0:?} vs {1:?}")]
    DimensionMismatch(Vec<i64>, Vec<i64>),

    #[error("invalid orientation: {0}")]
    Orientation(String),

    #[error("({p}, {label}) is not a {kind} position")]
    Parity {
        p: i64,
        label: String,
        kind: &'static str,
    },

    #[error("vertex ({p}, {label}) lies outside the AR quiver window")]
    OutsideWindow { p: i64, label: String },

    #[error("operation requires a type D graph")]
    NotTypeD,

    #[error("path is not sectional: {0}")]
    NotSectional(String),

    #[error("representations belong to different quivers")]
    QuiverMismatch,

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("representation is not in the rank scheme of the given orbit")]
    NotInRankScheme,

    #[error("realization of ({p}, {label}) failed after {attempts} attempts")]
    RealizationFailed {
        p: i64,
        label: String,
        attempts: usize,
    },

    #[error("no isomorphism found after {0} attempts")]
    IsoSearchFailed(usize),

    #[error("N is not a degeneration of M")]
    NotADegeneration,

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
