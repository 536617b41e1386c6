use std::path::PathBuf;
use std::time::Duration;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("edge endpoint `{0}` is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("invalid vertex name `{0}`")]
    BadName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge {0}-{1}")]
    UnknownEdge(String, String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {size} vertices, above the cap of {cap}")]
    SizeLimitExceeded { size: usize, cap: usize },
    #[error("invalid embedding: {0}")]
    InvalidEmbedding(String),
    #[error("part `{0}` is disconnected")]
    DisconnectedPart(String),
    #[error("search budget exceeded after {nodes} nodes ({elapsed:?})")]
    BudgetExceeded { nodes: u64, elapsed: Duration },
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("amalgam is not isometric")]
    NotIsometric,
    #[error("no cover with the requested classification exists")]
    InfeasibleClassification,
    #[error("part `{0}` is not bipartite after deleting the edges of J")]
    NotBipartiteAfterDeletion(String),
    #[error("{path}:{line}: {message}")]
    Parse {
        path: String,
        line: usize,
        message: String,
    },
    #[error("{path}: {message}")]
    Io { path: PathBuf, message: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, err: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            message: err.to_string(),
        }
    }
}
