use thiserror::Error;

/// Errors produced by every layer of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("self-loop at vertex {vertex}")]
    SelfLoop { vertex: usize },

    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("edge {u}-{v} lies inside one side of the bipartition")]
    SideViolation { u: usize, v: usize },

    #[error("invalid side partition: {0}")]
    InvalidSides(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("bipartite graph is not balanced (|X| = {x}, |Y| = {y})")]
    Unbalanced { x: usize, y: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("{what} of size {size} exceeds the enumeration cap {cap}")]
    CapExceeded { what: &'static str, size: usize, cap: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid vertex set: {0}")]
    InvalidVertexSet(String),

    #[error("no sign change of the polynomial found in [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NonConvergence { iterations: usize, residual: f64 },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("graph is complete")]
    Complete,
}

pub type Result<T> = std::result::Result<T, Error>;
