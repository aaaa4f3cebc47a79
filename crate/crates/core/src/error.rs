use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("composition of differentials is not zero ({nonzero} nonzero entries)")]
    CompositionNotZero { nonzero: usize },

    #[error("index {index} out of range (valid: 0..={max})")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("invalid field: {0}")]
    InvalidField(String),

    #[error("not a deformation: {0}")]
    NotADeformation(String),

    #[error("cochain is not a cocycle")]
    NotACocycle,

    #[error("map is not a splitting of the projection")]
    NotASplitting,

    #[error("formal power series is not invertible")]
    NotInvertible,

    #[error("enveloping algebra certification failed: {0}")]
    Certification(String),
}

pub type Result<T> = std::result::Result<T, Error>;
