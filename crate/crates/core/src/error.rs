//! Error types.

use thiserror::Error;

/// Rejected raw hypergraph descriptions.
///
/// Validation runs once, when a [`crate::WeightedHypergraph`] is built. After
/// that every query can rely on the structural invariants and most of them
/// only fail on out of range arguments.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("edge size k = {k} is not supported, need k >= 2")]
    UnsupportedEdgeSize { k: usize },
    #[error("hypergraph has no vertices")]
    NoVertices,
    #[error("edge {edge} has {got} vertices, expected k = {k}")]
    NonUniformEdge { edge: usize, got: usize, k: usize },
    #[error("edge {edge} repeats vertex {vertex}")]
    RepeatedVertexInEdge { edge: usize, vertex: usize },
    #[error("edges {first} and {second} contain the same vertex set")]
    DuplicateEdge { first: usize, second: usize },
    #[error("edge {edge} has a non-positive or non-finite weight")]
    NonPositiveWeight { edge: usize },
    #[error("edge {edge} references vertex {vertex} but n = {n}")]
    VertexIndexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("vertex {vertex} belongs to no edge")]
    IsolatedVertex { vertex: usize },
}

/// Errors from queries, tensor operations, spectral routines and generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("vertex {vertex} out of range, n = {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("codegree of a vertex with itself is not defined")]
    SameVertex,
    #[error("vertex set is empty")]
    EmptySet,
    #[error("intersection size t = {t} out of range, need 1 <= t <= {k}")]
    IntersectionSizeOutOfRange { t: usize, k: usize },
    #[error("vector has {got} entries, hypergraph has {expected} vertices")]
    DimensionMismatch { got: usize, expected: usize },
    #[error("dense tensor would hold {entries} entries, cap is {cap}")]
    TooLarge { entries: u128, cap: u128 },
    #[error("the zero vector cannot be normalized")]
    ZeroVector,
    #[error("hypergraph is not connected")]
    Disconnected,
    #[error("this operation is only defined for k >= 3, got k = {k}")]
    EdgeSizeBelowThree { k: usize },
    #[error("this operation supports the adjacency and signless Laplacian tensors only")]
    UnsupportedTensor,
    #[error("start vector must be strictly positive")]
    NonPositiveStart,
    #[error("power iteration did not converge within {iterations} iterations (ratio gap {gap:e})")]
    MaxIterationsExceeded { iterations: usize, gap: f64 },
    #[error("hypergraph is not regular with a uniform edge weight")]
    NotRegularUniform,
    #[error(
        "(lambda, x) is not an eigenpair, residual {residual:e} exceeds tolerance {tolerance:e}"
    )]
    NotAnEigenpair { residual: f64, tolerance: f64 },
    #[error("inconsistent generator parameters: {0}")]
    InconsistentParameters(String),
    #[error("could not reach a connected hypergraph within {attempts} sampling attempts")]
    ConnectivityUnreachable { attempts: usize },
    #[error("invalid input format: {0}")]
    InvalidFormat(String),
}

impl Error {
    /// True when the error means the input itself was malformed or invalid,
    /// as opposed to a failure of a numerical routine.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Validation(_) | Error::InvalidFormat(_) | Error::InconsistentParameters(_)
        )
    }
}
