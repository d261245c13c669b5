use thiserror::Error;

use crate::group::Family;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported rank {rank} for type {family}")]
    UnsupportedRank { family: Family, rank: usize },

    #[error("group mismatch: {left_family}{left_rank} vs {right_family}{right_rank}")]
    GroupMismatch {
        left_family: Family,
        left_rank: usize,
        right_family: Family,
        right_rank: usize,
    },

    #[error("invalid group element: {0}")]
    InvalidElement(String),

    #[error("{0:?} is not a root of this system")]
    UnknownRoot(Vec<i32>),

    #[error("element is not a reflection of this system")]
    NotAReflection,

    #[error("element has absolute length {found}, expected {expected}")]
    NotFullAbsoluteLength { expected: usize, found: usize },

    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("operation requires type {expected}, got {found}")]
    WrongFamily {
        expected: &'static str,
        found: Family,
    },

    #[error("operation requires the standard Coxeter element")]
    NonStandardCoxeter,

    #[error("malformed graph: {0}")]
    MalformedGraph(String),

    #[error("invalid Prüfer code: {0}")]
    InvalidCode(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
