use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// An operation was called outside its domain.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid instance: {0}")]
    InvalidInstance(String),

    #[error("unknown item {0:?}")]
    UnknownItem(String),

    #[error("malformed policy: {0}")]
    MalformedPolicy(String),

    /// A pseudo-polynomial table or exhaustive search would exceed its
    /// configured budget.
    #[error(
        "resource budget exceeded: {what} requires {required} {unit} but the budget is {limit} {unit} \
         (raise the budget or use a smaller instance)"
    )]
    Budget {
        what: &'static str,
        unit: &'static str,
        required: u128,
        limit: u128,
    },

    #[error("parse error: {0}")]
    Parse(String),
}
