use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {edge} repeats vertex {vertex}")]
    DuplicateVertexInEdge { edge: usize, vertex: usize },

    #[error("duplicate edge {edge:?}")]
    DuplicateEdge { edge: Vec<usize> },

    #[error("edge {edge} has fewer than two vertices")]
    EdgeTooSmall { edge: usize },

    #[error("hypergraph is not uniform")]
    NotUniform,

    #[error("hypergraph is not linear")]
    NotLinear,

    #[error("hypergraph is not connected")]
    NotConnected,

    #[error("length {len} is too small (minimum {min})")]
    LengthTooSmall { len: usize, min: usize },

    #[error("illegal parameters: {0}")]
    IllegalParameters(String),

    #[error("uniformity mismatch: hypergraph is {found}-uniform, requested {expected}")]
    UniformityMismatch { expected: usize, found: usize },

    #[error("illegal move: {0}")]
    IllegalMove(String),

    #[error("moved edges make the hypergraph non-linear")]
    ResultNotLinear,

    #[error("moved edges produce a duplicate edge")]
    ResultDuplicateEdge,

    #[error("hypergraph is not bicyclic: {0}")]
    NotBicyclic(String),

    #[error("unrecognized bicyclic core: {0}")]
    UnrecognizedCore(String),

    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),

    #[error("value {0} is not an integer")]
    NotInteger(String),

    #[error("hypergraph on {n} vertices exceeds the size limit {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("canonical labeling search exceeded its budget of {budget} nodes")]
    SearchBudgetExceeded { budget: usize },

    #[error("enumeration guard exceeded: k={k}, m={m}, limit m<={limit}")]
    GuardExceeded { k: usize, m: usize, limit: usize },

    #[error("empty family: {0}")]
    EmptyFamily(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}
