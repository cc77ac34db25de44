use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument that must be a positive integer was zero.
    #[error("{what} must be positive, got 0")]
    Zero { what: &'static str },

    /// A precondition of the operation does not hold at the given point.
    #[error("domain error: {0}")]
    Domain(String),

    /// The value is a pole of the function being evaluated.
    #[error("pole: {0}")]
    Pole(String),

    #[error("enumeration budget exceeded: k^n = {k}^{n} is larger than {budget}")]
    BudgetExceeded { k: u64, n: u64, budget: u64 },

    #[error("resource limit: {0}")]
    ResourceLimit(String),

    #[error("{id} needs a value for {name}")]
    MissingParameter { id: &'static str, name: &'static str },

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    /// Two routes that must agree by construction did not.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(what: &'static str, input: &str) -> Self {
        Error::Parse { what, input: input.to_string() }
    }
}
