use thiserror::Error;

/// Errors raised anywhere in the pipeline.
///
/// The variants are grouped by the exit code the CLI maps them to: parse
/// errors, computation errors, and inconsistencies between computed
/// invariants and the homology tables.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("exponent must be a non-negative integer literal (position {0})")]
    NegativeExponent(usize),
    #[error("exponent must be a non-negative integer literal (position {0})")]
    NonIntegerExponent(usize),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("job file: {0}")]
    Job(String),

    #[error("operands live in different rings")]
    RingMismatch,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("minor size {size} out of range for a {rows}x{cols} matrix")]
    MinorSize { size: usize, rows: usize, cols: usize },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("not an isolated complete intersection: {0}")]
    NotIcis(String),
    #[error("decomposition mismatch: g*H*g^t = {assembled}, expected {expected}")]
    DecompositionMismatch { assembled: String, expected: String },
    #[error("{0}")]
    Infinite(String),

    #[error("inconsistency: {0}")]
    Inconsistency(String),
}

impl Error {
    /// Process exit code for the CLI: 1 computation error, 2 parse error,
    /// 3 inconsistency.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownVariable(_)
            | Error::NegativeExponent(_)
            | Error::NonIntegerExponent(_)
            | Error::InvalidRing(_)
            | Error::Job(_) => 2,
            Error::Inconsistency(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
