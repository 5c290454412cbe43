use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("{0}: the zero ideal is not a valid argument")]
    ZeroIdeal(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid curve spec: {0}")]
    InvalidCurve(String),

    #[error("invalid gamma spec: {0}")]
    InvalidGamma(String),

    #[error("binomial is not weight-homogeneous: {0}")]
    NonHomogeneous(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// An internal cross-check between two independent constructions failed.
    #[error("cross-validation failed: {0}")]
    CrossValidation(String),
}

impl Error {
    /// Short machine-readable tag for the error class.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::DimensionMismatch { .. } => "dimension_mismatch",
            Error::ZeroIdeal(_) => "zero_ideal",
            Error::InvalidArgument(_) => "invalid_argument",
            Error::InvalidCurve(_) => "invalid_curve",
            Error::InvalidGamma(_) => "invalid_gamma",
            Error::NonHomogeneous(_) => "non_homogeneous",
            Error::Parse(_) => "parse",
            Error::CrossValidation(_) => "cross_validation",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
