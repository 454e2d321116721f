use thiserror::Error;

use crate::report::Report;

#[derive(Debug, Error)]
pub enum Error {
    /// Table has the wrong shape or refers to ids outside the carrier.
    #[error("malformed structure: {0}")]
    Structural(String),

    #[error("axiom check failed: {}", .0.summary())]
    Axioms(Report),

    #[error("element {0} is not in the carrier")]
    NotInCarrier(String),

    #[error("operation requires a non-empty carrier")]
    EmptyCarrier,

    #[error("generating set must be non-empty")]
    EmptyGenerators,

    #[error("word of even length {0}; heap words have odd length")]
    EvenLength(usize),

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("sub-heap is not normal")]
    NotNormal,

    #[error("subset is not closed under the heap operation")]
    NotClosed,

    #[error("structure must be Abelian")]
    NotAbelian,

    #[error("{0} is not a two-sided absorber")]
    NotAbsorber(String),

    #[error("truss is not ring-type")]
    NotRingType,

    #[error("truss is not unital")]
    NotUnital,

    #[error("structures do not match: {0}")]
    Mismatch(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
