use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: parts must be positive and weakly decreasing")]
    InvalidPartition(Vec<u32>),
    #[error("invalid skew shape: {0}")]
    InvalidShape(String),
    #[error("shape {0} is not checkerboardable: corners lie on diagonals of both parities")]
    NotCheckerboardable(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("invalid fill ({a},{b}): need a >= 1 and b >= 2")]
    InvalidFill { a: u32, b: u32 },
    #[error("empty index")]
    EmptyIndex,
    #[error("cutoff must be at least 2, got {0}")]
    InvalidCutoff(u64),
    #[error("truncated evaluation needs {states} column states, budget is {budget}")]
    DpBudgetExceeded { states: u64, budget: u64 },
    #[error("tableau is not constant along diagonals")]
    NotDiagonalConstant,
    #[error("shape {0} is not a ribbon")]
    NotARibbon(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("not admissible: {0}")]
    NotAdmissible(String),
    #[error("no exact-at-truncation reduction available for shape {0}")]
    NoReductionAvailable(String),
    #[error("evaluation context cannot supply {0}")]
    MissingContext(String),
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("invalid stair data: {0}")]
    InvalidMu(String),
    #[error("incompatible operands: {0}")]
    Incompatible(String),
}
