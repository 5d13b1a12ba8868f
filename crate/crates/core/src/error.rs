use thiserror::Error;

/// Errors produced by the graph, solver, witness and generator layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("broadcast has {got} values but the graph has {expected} vertices")]
    SizeMismatch { expected: usize, got: usize },

    #[error("graph has {n} vertices, above the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("requested path length {length} exceeds ecc({vertex}) = {ecc}")]
    PathTooLong { vertex: usize, length: usize, ecc: usize },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("vertex set is not a packing: dist({0},{1}) < 3")]
    NotAPacking(usize, usize),

    #[error("degenerate construction at stage {0}")]
    Degenerate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
