use thiserror::Error;

use crate::exact::Field;

/// Errors shared across the crate. Every domain error names the violated
/// constraint so callers (and the CLI) can report it verbatim.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not diagonal")]
    NotDiagonal,

    #[error("{0}")]
    Constraint(String),

    #[error("not a member of {0}")]
    NotMember(String),

    #[error("input is a unit; orbit witnesses apply to singular members (use classify)")]
    UnitInput,

    #[error("weight shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("weight is not dominant: {0}")]
    NotDominant(String),

    #[error("operation not supported for kind {0}")]
    UnsupportedKind(String),

    #[error("sampling failed after {attempts} attempts: {reason}")]
    SamplingFailed { attempts: u32, reason: String },

    #[error("witness search failed: {0}")]
    WitnessSearch(String),

    #[error("rank oracle did not stabilize within {points_used} points (last rank {last_rank})")]
    OracleNotStabilized { last_rank: usize, points_used: usize },

    #[error("invalid JSON input: {0}")]
    Json(String),

    #[error("argument out of supported range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;
