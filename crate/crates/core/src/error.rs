use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for root system family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("rank {rank} exceeds the configured ceiling {ceiling}")]
    RankAboveCeiling { rank: usize, ceiling: usize },

    #[error("vector {0:?} is not a root")]
    NotARoot(Vec<i64>),

    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("data integrity failure for {label}: computed dimension {computed}, catalog says {known}")]
    DimensionIntegrity {
        label: String,
        computed: u64,
        known: u64,
    },

    #[error("data integrity failure for {label}: {detail}")]
    CatalogIntegrity { label: String, detail: String },

    #[error("marking support must be non-empty")]
    EmptySupport,

    #[error("simple root index {index} outside 1..={rank}")]
    SupportOutOfRange { index: usize, rank: usize },

    #[error("cannot parse marking {0:?}")]
    InvalidMarking(String),

    #[error("support {inner:?} is not contained in {outer:?}")]
    NotNested { inner: Vec<usize>, outer: Vec<usize> },

    #[error("invalid parameters for {family}: {detail}")]
    InvalidParameters { family: String, detail: String },

    #[error("maximum rank must be at least 2, got {0}")]
    MaxRankTooSmall(usize),

    #[error("unknown symmetric space {0:?}")]
    UnknownSpace(String),

    #[error("unsupported output format {0:?}")]
    UnsupportedFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
