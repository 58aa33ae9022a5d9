use thiserror::Error;

/// Errors raised by the combinatorial and linear-algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input is larger than the configured cap for this operation.
    #[error("{what}: n = {n} exceeds the configured cap of {cap}")]
    Size { what: &'static str, n: usize, cap: usize },

    /// Two objects that must share a ground set do not.
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    /// Malformed textual or JSON input.
    #[error("parse error: {0}")]
    Parse(String),

    /// A precondition on the shape of the input (acyclicity, bijectivity, ...) failed.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("element {element} is outside 1..={n}")]
    OutOfRange { element: usize, n: usize },

    #[error("block position {k} is invalid for a partition with {blocks} blocks")]
    Position { k: usize, blocks: usize },

    #[error("invalid argument: {0}")]
    Argument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
