use thiserror::Error;

use crate::partition::Partition;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failures while decoding graph or partition text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("invalid character {ch:?} at byte {pos}")]
    InvalidCharacter { ch: char, pos: usize },
    #[error("graph6 body has {found} bytes, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("{n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("malformed edge line {line}: {text:?}")]
    MalformedEdge { line: usize, text: String },
    #[error("invalid partition {0:?}")]
    InvalidPartition(String),
    #[error("basis file line {line}: {reason}")]
    BasisLine { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("resource guard: {what} is {actual}, limit {limit} (set CSF_LAB_MAX_N to override)")]
    Resource { what: &'static str, actual: usize, limit: usize },

    #[error("partitions have different weights ({0} vs {1})")]
    WeightMismatch(usize, usize),
    #[error("symmetric functions have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("graphs have different vertex counts ({0} vs {1})")]
    VertexCountMismatch(usize, usize),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("graph has no cycle")]
    NoCycle,
    #[error("component partitions differ: {0} vs {1}")]
    PartitionMismatch(Partition, Partition),
    #[error("invalid step witness ({v1}, {v2}, {v3}): {reason}")]
    StepWitness { v1: usize, v2: usize, v3: usize, reason: String },
    #[error("route does not start where the previous one ends")]
    RouteMismatch,
    #[error("edges do not form a triangle")]
    NotATriangle,
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("chromatic basis is not a forest-basis")]
    NonForestBasis,
    #[error("invalid chromatic basis: {0}")]
    InvalidBasis(String),
    #[error("basis elements are linearly dependent; not a basis")]
    SingularBasis,
    #[error("partition is not {k}-reducible: reduced weight {m} > {k}")]
    NotReducible { m: usize, k: usize },
    #[error("{what} = {value} outside [{min}, {max}]")]
    OutOfRange { what: &'static str, value: usize, min: usize, max: usize },
    #[error("expansion failed its reconstruction identity")]
    IdentityViolated,
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }
}
