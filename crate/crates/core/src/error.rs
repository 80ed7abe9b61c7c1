use thiserror::Error;

use crate::ArbInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A division that must be exact left a remainder. Never caused by input.
    #[error("inexact division in {context}: {numerator} / {denominator}")]
    InexactDivision {
        context: &'static str,
        numerator: ArbInt,
        denominator: ArbInt,
    },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("row {n} is outside the triangle (n_max = {n_max})")]
    RowOutOfRange { n: usize, n_max: usize },

    #[error("cell ({n}, {k}) is outside 0 <= k <= n")]
    CellOutOfRange { n: usize, k: usize },

    #[error("{family} enumeration is limited to n <= {limit} (got {n})")]
    TooLarge {
        family: &'static str,
        n: usize,
        limit: usize,
    },

    #[error("partition error: {0}")]
    Partition(String),

    #[error("reference data, line {line}: {message}")]
    ReferenceData { line: usize, message: String },

    #[error("malformed {format} input: {message}")]
    Parse {
        format: &'static str,
        message: String,
    },
}
