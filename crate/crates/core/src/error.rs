use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("capacity exceeded: {what} supports n <= {max}, got n = {n}")]
    Capacity {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("cannot parse {kind} at position {pos}: {msg}")]
    Parse {
        kind: &'static str,
        pos: usize,
        msg: String,
    },

    /// The closure of a relation contains a cycle through distinct elements.
    #[error("relation is not a partial order: cycle through elements {cycle:?}")]
    NotAPartialOrder { cycle: Vec<usize> },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

pub(crate) fn check_capacity(what: &'static str, n: usize, max: usize) -> Result<()> {
    if n > max {
        Err(Error::Capacity { what, n, max })
    } else {
        Ok(())
    }
}
