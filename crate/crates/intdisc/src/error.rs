use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Domain errors (singular forms, divergent
/// series, inadmissible quadrature) are distinguished from malformed input.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown diagram `{0}`")]
    UnknownDiagram(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("singular form: {0}")]
    Singular(String),
    #[error("discriminant locus reached (t = 1); log coefficients {log_coefficients:?}")]
    DiscriminantLocus { log_coefficients: Vec<f64> },
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("pole of the gamma function at {0}")]
    GammaPole(f64),
    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
    #[error("calibration failed: {0}")]
    Calibration(String),
    #[error("regime mismatch: expected {expected}, found {found}")]
    RegimeMismatch { expected: String, found: String },
}

impl Error {
    /// True for errors that stem from mathematical inadmissibility of valid
    /// input rather than from malformed input.
    pub fn is_domain(&self) -> bool {
        !matches!(
            self,
            Error::Invalid(_)
                | Error::Parse { .. }
                | Error::UnknownVariable(_)
                | Error::UnknownDiagram(_)
                | Error::Shape(_)
        )
    }
}
