//! Crate-wide error type.

use thiserror::Error;

/// Errors reported by parsing, construction, and the checked reduction maps.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed text input. `line` is 1-based.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A constructed value violates a structural precondition.
    #[error("{0}")]
    Invalid(String),

    /// A variable set built over one universe was used with a graph of
    /// a different size.
    #[error("variable set universe {set_universe} does not match graph with {n_vars} variables")]
    UniverseMismatch { set_universe: usize, n_vars: usize },

    /// A size or index argument outside its documented range.
    #[error("{name} {value} out of range [{min}, {max}]")]
    OutOfRange {
        name: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    /// The reduction requires a connected input graph.
    #[error("graph is disconnected: the reduction requires a connected input")]
    Disconnected,

    /// A vertex set fails the cover condition; one uncovered edge is reported.
    #[error("not a vertex cover: edge ({u}, {v}) is uncovered")]
    NotVertexCover { u: usize, v: usize },

    /// A variable set fails the stopping-set condition; the first check
    /// with exactly one member neighbor is reported.
    #[error("not a stopping set: check {check} has exactly one neighbor in the set")]
    NotStoppingSet { check: usize },

    /// Erasure probability outside [0, 1].
    #[error("invalid erasure probability {0}; must be in [0, 1]")]
    InvalidProbability(f64),

    /// A runtime self-check failed. This indicates a bug, never bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
