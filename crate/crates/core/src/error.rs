use thiserror::Error as ThisError;

/// Crate-wide error type. Mathematical verdicts (axiom reports, Galois
/// failure witnesses, triviality statuses) are ordinary values, not errors;
/// this type covers misuse, unsupported requests and exhausted search caps.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("mixed fields: {0}")]
    MixedFields(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("no presentation: {0}")]
    NoPresentation(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("math failure: {0}")]
    MathFailure(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
