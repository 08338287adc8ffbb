use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Validation(String),

    #[error("the hypergraph has no edges")]
    NoEdges,

    #[error("{target} is not a nonnegative combination of {u} and {v}")]
    NoRepresentation { target: u64, u: u64, v: u64 },

    #[error("regime not applicable: {0}")]
    Regime(String),

    #[error("no such design: {0}")]
    NoSuchDesign(String),

    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
}

impl Error {
    pub(crate) fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub(crate) fn regime(msg: impl Into<String>) -> Self {
        Error::Regime(msg.into())
    }
}
