use std::fmt;

/// Errors raised by workbench operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two matrices were combined but their dimensions differ.
    DimensionMismatch { left: usize, right: usize },
    /// An order was passed that is not of the form 2^n - 1.
    InvalidParaorder(u64),
    /// A quadrant path descends deeper than the dyadic structure allows.
    PathTooDeep { depth: usize, max: usize },
    /// A residue square cannot be reproduced from its pattern descriptor.
    NotDescribable(String),
    /// The block ansatz produced an inconsistent linear system.
    SolverInconsistent(String),
    /// A search or factorization exceeded its configured budget.
    BudgetExceeded(String),
    /// Working precision ran out before the requested output stabilized.
    PrecisionExhausted(String),
    /// A lookup (prime rank, table name, quotient index) fell outside
    /// the covered range.
    OutOfRange(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::InvalidParaorder(p) => write!(f, "invalid paraorder {p} (need 2^n - 1)"),
            Error::PathTooDeep { depth, max } => {
                write!(f, "quadrant path of length {depth} exceeds depth {max}")
            }
            Error::NotDescribable(what) => write!(f, "square not describable: {what}"),
            Error::SolverInconsistent(what) => write!(f, "inconsistent linear system: {what}"),
            Error::BudgetExceeded(what) => write!(f, "budget exceeded: {what}"),
            Error::PrecisionExhausted(what) => write!(f, "precision exhausted: {what}"),
            Error::OutOfRange(what) => write!(f, "out of range: {what}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
