use thiserror::Error;

/// Errors raised by graph construction, parsing and the bounded exact searches.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("class size {0} is below the minimum of 2")]
    ClassTooSmall(usize),
    #[error("class size {a} exceeds the supported maximum of {max}")]
    ClassTooLarge { a: usize, max: usize },
    #[error("vertex {vertex} is out of range for class size {a}")]
    VertexOutOfRange { vertex: usize, a: usize },
    #[error("arc ({0}, {1}) joins two vertices of the same colour class")]
    SameClassArc(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid JSON graph: {0}")]
    Json(String),
    #[error("invalid matching: {0}")]
    InvalidMatching(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("{what} is limited to {limit}, got {value}")]
    CapExceeded {
        what: &'static str,
        limit: usize,
        value: usize,
    },
    #[error("invalid family parameters: {0}")]
    InvalidParameters(String),
    #[error("merge plan does not apply: {0}")]
    InvalidPlan(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
