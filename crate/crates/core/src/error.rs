use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degenerate interpolation nodes: x = {0} appears more than once")]
    DegenerateNodes(String),

    #[error("interpolation needs at least one node")]
    NoInterpolationNodes,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix data has {got} entries, expected {expected}")]
    MatrixShape { expected: usize, got: usize },

    #[error("invalid partition {0:?}: parts must be weakly decreasing and non-negative")]
    InvalidPartition(Vec<i64>),

    #[error("invalid Young shape {0:?}: parts must be weakly decreasing and positive")]
    InvalidShape(Vec<usize>),

    #[error("poset has {0} elements; at most 64 are supported")]
    PosetTooLarge(usize),

    #[error("element index {index} out of range for a poset on {size} elements")]
    ElementOutOfRange { index: usize, size: usize },

    #[error("relations contain a cycle through elements {0} and {1}")]
    CyclicRelation(usize, usize),

    #[error("relation matrix is not a partial order: {0}")]
    NotPartialOrder(String),

    #[error("invalid rooted tree: {0}")]
    InvalidTree(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("the polytope is empty")]
    EmptyPolytope,

    #[error("{0}")]
    InvalidArgument(String),

    #[error("mu = {mu:?} is not contained in lambda = {lambda:?}")]
    NotContained { lambda: Vec<i64>, mu: Vec<i64> },

    #[error("inconsistent row sums: {0}")]
    InconsistentRowSums(String),

    #[error("insufficient samples / non-polynomial fit: interpolant predicts {predicted} at n = {at}, count is {actual}")]
    NonPolynomialFit {
        at: usize,
        predicted: String,
        actual: String,
    },

    #[error("request exceeds the enumeration cap: {0}")]
    OverCap(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("missing fixture {}", .0.display())]
    MissingFixture(PathBuf),

    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    ThreadPool(#[from] rayon::ThreadPoolBuildError),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
