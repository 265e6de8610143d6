use alloc::string::String;

use crate::graph::VertexId;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex ids must be positive")]
    ZeroVertex,
    #[error("arc multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("a relation needs at least one arc")]
    EmptyRelation,
    #[error("vertex {0} is not part of the instance")]
    UnknownVertex(VertexId),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("sequence is not a path")]
    NotAPath,
    #[error("sequence is not a cycle")]
    NotACycle,
    #[error("root order is not a permutation of the vertex set")]
    NotAPermutation,
    #[error("invalid seed set: {0}")]
    InvalidSeeds(String),
    #[error("vertex {0} has no color")]
    PartialColoring(VertexId),
    #[error("instance has {n} vertices, above the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("arithmetic overflow")]
    Overflow,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
