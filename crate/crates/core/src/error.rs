use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("loop at vertex {0}: only loopless graphs are supported")]
    Loop(usize),

    #[error("vertex id {id} out of range for a graph on {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("inconsistent embedding: {0}")]
    Embedding(String),

    #[error("invalid PD code `{name}`: {reason}")]
    Pd { name: String, reason: String },

    #[error("graph is not P4-sparse: {0}")]
    NotP4Sparse(String),

    #[error("vertex {vertex} has degree {degree}, expected a 4-regular graph")]
    NotFourRegular { vertex: usize, degree: usize },

    #[error("brute force refused: {n} vertices exceeds the limit of {limit}")]
    SizeGuard { n: usize, limit: usize },

    #[error("reduction stopped at a {0}-vertex graph that is neither empty nor the 2-vertex 4-regular graph")]
    NontrivialTerminal(usize),

    /// A proof-backed construction failed its own verification.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}
