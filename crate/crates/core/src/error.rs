use thiserror::Error;

use crate::parser::ParseError;

/// Errors raised by the library.
///
/// A contradictory cube is a value (`Cube::bottom`), never an error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable A{var} is outside the declared range 1..={n}")]
    VarOutOfRange { var: u32, n: usize },

    #[error("enumerating {n} variables exceeds the cap of {cap}")]
    Capacity { n: usize, cap: usize },

    #[error("index {index} is outside 1..={n}")]
    IndexOutOfRange { index: u32, n: usize },

    #[error("{what} needs n >= {min}, got n = {n}")]
    TooFewVariables {
        what: &'static str,
        n: usize,
        min: usize,
    },

    #[error("k = {k} is outside 2..={count}")]
    InvalidK { k: usize, count: usize },

    #[error("sample count must be at least 1")]
    NoSamples,

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// A checked algebraic identity did not hold. Signals a construction bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
