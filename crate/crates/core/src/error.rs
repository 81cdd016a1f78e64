use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// are reported through [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = 1")]
    PoleAtOne,
    #[error("value is not a Laurent polynomial")]
    NotLaurent,
    #[error("degree {degree} exceeds cap {cap}")]
    CapExceeded { degree: usize, cap: usize },
    #[error("element is not homogeneous")]
    NonHomogeneous,
    #[error("weight mismatch: {0}")]
    WeightMismatch(String),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("axiom failure: {0}")]
    AxiomFailure(String),
    #[error("not quasitriangular: {0}")]
    NotQuasitriangular(String),
    #[error("truncated phi matrix is singular (cap too small?)")]
    SingularPhi,
    #[error("invalid datum: {0}")]
    InvalidDatum(String),
    #[error("parse error in `{field}`: {msg}")]
    Parse { field: String, msg: String },
    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub fn parse(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
