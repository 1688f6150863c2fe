//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by configuration validation, simulation, estimation,
/// fitting, and the QKD operating-point solver.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value violates a documented invariant.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// An operation was called with arguments outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative computation failed to reach its convergence threshold.
    #[error("{context}: no convergence after {iterations} iterations")]
    NoConvergence { context: String, iterations: usize },

    /// An event stream that must be time-ordered is not.
    #[error("event stream not time-ordered at index {0}")]
    UnsortedEvents(usize),

    /// The expected number of simulated events exceeds the configured cap.
    #[error("expected event count ~{expected} exceeds memory cap {cap}")]
    EventCapExceeded { expected: u64, cap: u64 },

    /// A malformed interchange file.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Underlying I/O failure.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
