use thiserror::Error;

use crate::arc::{Arc, CrossKind};
use crate::ncl::NclViolation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("arc {arc} is not legal for {algebra}")]
    IllegalArc { arc: Arc, algebra: String },

    #[error("crossing kind is only defined for distinct arcs, got {0} twice")]
    EqualArcs(Arc),

    #[error("not a monobrick: {a} and {b} are {kind}")]
    NotMonobrick { a: Arc, b: Arc, kind: CrossKind },

    #[error("arc {0} is not admissible")]
    NotAdmissible(Arc),

    #[error("diagrams live over different algebras ({0} vs {1})")]
    AlgebraMismatch(String, String),

    #[error("resource budget exceeded: {algebra} exceeds the cap n <= {cap}")]
    BudgetExceeded { algebra: String, cap: u32 },

    #[error("invalid linked partition: {0}")]
    InvalidPartition(NclViolation),

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("unsupported field characteristic {0}")]
    UnsupportedField(u8),

    #[error("invalid oracle data: {0}")]
    Oracle(String),
}
