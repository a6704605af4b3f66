use thiserror::Error;

/// Errors raised when constructing or combining algebraic objects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(
        "matrix must be square with dimension at least 1 (got {rows} rows, row lengths {cols:?})"
    )]
    Shape { rows: usize, cols: Vec<usize> },
    #[error("matrix entry ({row}, {col}) is {value}, expected 0 or 1")]
    NotZeroOne { row: usize, col: usize, value: i64 },
    #[error("matrix is degenerate: {0}")]
    Degenerate(String),
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("word {word:?} is not admissible for the context matrix")]
    Inadmissible { word: Vec<u32> },
    #[error("cycle word {word:?} is not cyclically admissible for the context matrix")]
    InadmissibleCycle { word: Vec<u32> },
    #[error("empty word where a nonempty one is required")]
    EmptyWord,
    #[error("context mismatch: expected dimension {expected}, found {found}")]
    ContextMismatch { expected: usize, found: usize },
    #[error("context mismatch: operands live over different matrices")]
    DifferentContexts,
    #[error("matrix dimensions incompatible: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
