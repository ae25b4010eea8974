use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {0} has no incident edges")]
    IsolatedVertex(usize),

    #[error("invalid edge ({u}, {v}): {reason}")]
    InvalidEdge { u: usize, v: usize, reason: &'static str },

    #[error("graph has {n} vertices; at most {limit} are supported here")]
    TooLarge { n: usize, limit: usize },

    #[error("unknown named graph `{0}`")]
    UnknownName(String),

    #[error("invalid parameter for `{name}`: {reason}")]
    InvalidParam { name: String, reason: String },

    #[error("graph is not Eulerian: vertex {vertex} has odd degree {degree}")]
    NotEulerian { vertex: usize, degree: usize },

    #[error("set label must be non-empty")]
    EmptyLabel,

    #[error("vertex {0} has no label")]
    MissingLabel(usize),

    #[error("labeling is not weak at edge ({0}, {1})")]
    NotWeak(usize, usize),

    #[error("vertices {0} and {1} are adjacent, so the set is not independent")]
    NotIndependent(usize, usize),

    #[error("vertex overlap is not one-to-one at ({0}, {1})")]
    BadOverlap(usize, usize),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
