use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("vertex {vertex} out of range for graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("({0}, {1}) is not an edge of the host graph")]
    NotAnEdge(usize, usize),

    #[error("vertex map is not a bijection: {0}")]
    NotABijection(String),

    #[error("no path between host vertices {0} and {1}")]
    Disconnected(usize, usize),

    #[error("edge set is not an edge cut: removal leaves {components} components")]
    NotAnEdgeCut { components: usize },

    #[error("invalid cut partition: {0}")]
    InvalidPartition(String),

    #[error("budget exceeded: {required} candidates needed, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameters(msg.into())
}
