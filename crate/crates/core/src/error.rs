use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed graph6 input: {0}")]
    MalformedGraph6(String),
    #[error("graph order {0} is not supported by the graph6 codec")]
    UnsupportedSize(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid edge list: {0}")]
    InvalidEdge(String),
    #[error("invalid order {0}: expected an even number of at least {1}")]
    InvalidOrder(usize, usize),
    #[error("order {order} exceeds the exhaustive-search cap of {cap}")]
    ScaleExceeded { order: usize, cap: usize },
    #[error("graph is not cubic")]
    NotCubic,
    #[error("graph is not {0}-regular")]
    NotRegular(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("order {0} is not divisible by 8")]
    BadOrder(usize),
    #[error("center set is not independent")]
    NotIndependent,
    #[error("bad center set: {0}")]
    BadCenterSet(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
