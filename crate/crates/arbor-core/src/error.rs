use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),

    #[error("edge {0} is not an edge of the graph")]
    EdgeNotInGraph(crate::graph::Edge),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph is not chordal; tree-width via clique number needs a chordal input")]
    NotChordal,

    #[error("format error: {0}")]
    Format(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
