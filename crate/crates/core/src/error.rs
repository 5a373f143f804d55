use thiserror::Error;

use crate::stats::MomentReport;

/// Which monotonicity constraint a matrix violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Row,
    Column,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("box side lengths must be positive, got ({a}, {b}, {c})")]
    ZeroSide { a: usize, b: usize, c: usize },

    #[error("expected a {rows}x{cols} matrix")]
    BadShape { rows: usize, cols: usize },

    #[error("entry {value} at ({row}, {col}) is outside 0..={max}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        max: usize,
    },

    #[error("{dir:?} {index} is not decreasing at ({row}, {col})")]
    NotDecreasing {
        dir: Direction,
        index: usize,
        row: usize,
        col: usize,
    },

    #[error("operation needs a square box, got {a}x{b}")]
    NotSquare { a: usize, b: usize },

    #[error("{what} = {value} outside {lo}..={hi}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("size {count} exceeds the limit {limit}")]
    TooLarge { count: String, limit: u64 },

    #[error("polynomial division leaves a nonzero remainder")]
    NotDivisible,

    #[error("shape has no tableaux with entries at most {max_entry}")]
    NoTableaux { max_entry: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid array: {0}")]
    InvalidArray(String),

    #[error("tableau does not match the array parameters: {0}")]
    ShapeMismatch(String),

    #[error("moment identities failed: {0}")]
    Mismatch(Box<MomentReport>),
}

pub type Result<T> = std::result::Result<T, Error>;
