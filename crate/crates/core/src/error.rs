use thiserror::Error;

use crate::weight::Weight;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("unsupported root system {label}: {reason}")]
    UnsupportedType { label: String, reason: String },

    #[error("weight {weight} is not dominant for {system}")]
    NotDominant { weight: Weight, system: String },

    #[error("root systems differ: {left} vs {right}")]
    SystemMismatch { left: String, right: String },

    #[error("Weyl dimension of {weight} over {system} is not an integer: {value}")]
    NonIntegralDimension {
        weight: Weight,
        system: String,
        value: String,
    },

    #[error(
        "index of twist {weight} is not an integer ({value}); \
         the twisted spinor representation does not descend to the isotropy group"
    )]
    NonIntegralIndex { weight: Weight, value: String },

    #[error("negative multiplicity {multiplicity} for {weight} in tensor decomposition")]
    NegativeMultiplicity { weight: Weight, multiplicity: i64 },

    #[error("dimension check failed: {context}: expected {expected}, got {found}")]
    DimensionMismatch {
        context: String,
        expected: String,
        found: String,
    },

    #[error("unknown symmetric space '{0}'")]
    UnknownCase(String),

    #[error("invalid parameters for {case}: {reason}")]
    InvalidParams { case: String, reason: String },

    #[error("index check failed for {case}: expected {expected}, computed {computed}")]
    IndexMismatch {
        case: String,
        expected: String,
        computed: String,
    },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("catalog invariant violated for {case}: {detail}")]
    Invariant { case: String, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
