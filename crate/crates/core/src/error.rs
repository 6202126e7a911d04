//! Error type shared by all solver modules.

use alloc::string::String;
use core::fmt;

/// Errors reported by constructors and solver entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two strings that must have equal length do not.
    LengthMismatch { expected: usize, got: usize },
    /// A row or matrix violates a structural invariant.
    InvalidInstance(String),
    /// An assignment's length does not match the row count.
    BadAssignment { rows: usize, labels: usize },
    /// An exact solver was asked to exceed its enumeration budget.
    BudgetExceeded { limit: usize, requested: usize },
    /// A requested fixed A-count is larger than the row count.
    BadFixedCount { n: usize, r: usize },
    /// The instance does not satisfy a solver's structural precondition.
    Precondition(String),
    /// Too few reference rows on one side to form a trisection.
    TrisectionTooSmall { side_rows: usize },
    /// `r` or `r'` is at or below the small-case cutoff; use the exact
    /// fixed-count solver instead.
    SmallCase { r: usize, r_prime: usize, cutoff: usize },
    /// Fixed selections for the two solution strings share a row.
    SelectionOverlap { row: usize },
    /// A selection references a row outside its chunk.
    SelectionOutOfChunk { row: usize },
    /// Invalid precision parameters.
    BadPrecision(String),
    /// Instance generation cannot satisfy the family constraints.
    Unsatisfiable(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::LengthMismatch { expected, got } => {
                write!(f, "length mismatch: expected {expected}, got {got}")
            }
            Error::InvalidInstance(msg) => write!(f, "invalid instance: {msg}"),
            Error::BadAssignment { rows, labels } => {
                write!(f, "assignment has {labels} labels for {rows} rows")
            }
            Error::BudgetExceeded { limit, requested } => {
                write!(f, "budget exceeded: {requested} > {limit}")
            }
            Error::BadFixedCount { n, r } => write!(f, "fixed count {r} exceeds {n} rows"),
            Error::Precondition(msg) => write!(f, "precondition violated: {msg}"),
            Error::TrisectionTooSmall { side_rows } => {
                write!(f, "too few reference rows ({side_rows}) to form a trisection")
            }
            Error::SmallCase { r, r_prime, cutoff } => write!(
                f,
                "r={r}, r'={r_prime} at or below small-case cutoff {cutoff}; use exact_fixed_count"
            ),
            Error::SelectionOverlap { row } => {
                write!(f, "selections for both strings contain row {row}")
            }
            Error::SelectionOutOfChunk { row } => {
                write!(f, "selected row {row} lies outside its chunk")
            }
            Error::BadPrecision(msg) => write!(f, "bad precision parameters: {msg}"),
            Error::Unsatisfiable(msg) => write!(f, "unsatisfiable generator spec: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
