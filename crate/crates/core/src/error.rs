use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("colour {colour} outside palette 1..={q}")]
    ColourOutOfRange { colour: usize, q: usize },

    #[error("edge {0}-{1} has no colour")]
    Uncoloured(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not a forest")]
    NotAForest,

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded after {nodes} nodes ({millis} ms): {reason}")]
    BudgetExceeded {
        nodes: u64,
        millis: u64,
        reason: String,
    },

    #[error("unknown property `{0}`")]
    UnknownProperty(String),

    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }

    /// True for the errors that mean "the search gave up", as opposed to bad input.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
