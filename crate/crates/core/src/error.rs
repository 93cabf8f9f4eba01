use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("sequence is not non-increasing at position {position}")]
    NotSorted { position: usize },

    #[error("row sums total {rows} but column sums total {cols}")]
    Unbalanced { rows: usize, cols: usize },

    #[error("line-sum distance {double} is odd; inputs are inconsistent")]
    OddDistance { double: usize },

    #[error("line sums are infeasible: no binary image realizes them")]
    Infeasible,

    #[error("set is not uniquely determined by its line sums")]
    NotUnique,

    #[error("column order is not a permutation of 1..={len}")]
    BadPermutation { len: usize },

    #[error("row {row} has sum {sum} exceeding the width {width}")]
    RowExceedsWidth {
        row: usize,
        sum: usize,
        width: usize,
    },

    #[error("enumeration passed the cap of {cap} realizations")]
    CapExceeded { cap: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
