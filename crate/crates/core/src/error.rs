//! Error taxonomy.
//!
//! Three kinds of failure are kept strictly apart:
//!
//! * [`ParseError`] — a quiver file that does not match the format;
//! * [`UsageError`] — a caller broke an operation's precondition
//!   (bad vertex index, length mismatch, non-Δ input, guard refusal);
//! * [`Violation`] — a computed counterexample to a structural law the
//!   machinery expects to hold. A violation is never a bug in the caller:
//!   it means either an engine defect or a genuine falsification, and the
//!   harness aborts on it with the full payload serialized.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Quiver file parse failure. Lines and columns are 1-based; the column
/// counts whitespace-separated tokens, not bytes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected vertex count, found {found:?}")]
    BadHeader { line: usize, found: String },
    #[error("missing header line with the vertex count")]
    MissingHeader,
    #[error("vertex count must be at least 1")]
    ZeroVertices,
    #[error("line {line}, column {col}: non-numeric entry {found:?}")]
    BadEntry {
        line: usize,
        col: usize,
        found: String,
    },
    #[error("line {line}, column {col}: negative entry {found}")]
    NegativeEntry { line: usize, col: usize, found: i64 },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RowLength {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("expected {expected} adjacency rows, found {found}")]
    RowCount { expected: usize, found: usize },
}

/// A precondition or argument error. These are always caller mistakes,
/// never evidence against the algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{0}")]
pub struct UsageError(pub String);

impl UsageError {
    pub fn new(msg: impl Into<String>) -> Self {
        UsageError(msg.into())
    }
}

/// A computed counterexample to a law the harness verifies.
///
/// The payload names the law, the quiver it failed on, and enough detail to
/// reproduce the failure. Expected never to occur; any occurrence is a
/// build-failing event.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize, Error)]
#[error("violation of {law}: {detail}")]
pub struct Violation {
    /// Short identifier of the law that failed.
    pub law: String,
    /// Human-readable description of the counterexample.
    pub detail: String,
    /// Adjacency matrix of the quiver the failure occurred on, if any.
    pub quiver_adj: Option<Vec<Vec<u32>>>,
}

impl Violation {
    pub fn new(law: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation {
            law: law.into(),
            detail: detail.into(),
            quiver_adj: None,
        }
    }

    pub fn on_quiver(mut self, adj: Vec<Vec<u32>>) -> Self {
        self.quiver_adj = Some(adj);
        self
    }
}

/// Either failure mode of a checker: the caller's fault, or a computed
/// counterexample.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error(transparent)]
    Violation(#[from] Violation),
}
