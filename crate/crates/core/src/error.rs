use thiserror::Error;

use crate::bigraph::Vertex;

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed coloring document: {0}")]
    Malformed(String),

    #[error("row {row} has {found} cells, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },

    #[error("unknown colour code {0:?}")]
    UnknownColor(String),

    #[error("vertex {vertex} out of range for a {n_left}x{n_right} coloring")]
    VertexOutOfRange { vertex: Vertex, n_left: usize, n_right: usize },

    #[error("construction error: {0}")]
    Construction(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("coloring is not complete")]
    Incomplete,

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
