use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot parse {input:?} at byte {position}: {reason}")]
    Parse { input: String, position: usize, reason: String },

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<usize>, reason: String },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("vector is not supported on charge {expected}: found charges {found:?}")]
    MixedCharge { expected: i64, found: Vec<i64> },

    #[error("unknown identity case {0:?}")]
    UnknownCase(String),

    #[error("invalid parameters for {case:?}: {reason}")]
    InvalidParams { case: String, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
