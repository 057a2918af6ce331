use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("invalid {family} parameters: {reason}")]
    InvalidFamily { family: &'static str, reason: String },

    #[error("{requested} vertices exceed the capacity of {max}")]
    Capacity { requested: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("invalid family spec `{0}`")]
    FamilySpec(String),

    #[error("count overflow")]
    Overflow,

    #[error("vertex set is not dominating")]
    NotDominating,

    #[error("{what} is outside the formula's domain: {value}")]
    OutOfDomain { what: &'static str, value: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("search budget exhausted")]
    Timeout,
}
