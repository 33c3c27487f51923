use thiserror::Error;

/// Library-wide error type.
///
/// Variants are grouped by the process exit code the CLI maps them to:
/// invalid input (2), size caps (3), and internal validation failures (4).
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid element word: {0}")]
    InvalidWord(String),
    #[error("unknown preset: {0}")]
    UnknownPreset(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("group enumeration exceeded cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("group closure exceeded {cap} elements")]
    TooLarge { cap: usize },

    #[error("eigenvalue separation failed after {attempts} randomized attempts")]
    NumericalDegeneracy { attempts: usize },
    #[error("property violation: {0}")]
    PropertyViolation(String),
    #[error("identity violation: {0}")]
    IdentityViolation(String),
    #[error("validation failure: {0}")]
    ValidationFailure(String),
    #[error("stabilization failure: {0}")]
    StabilizationFailure(String),

    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidMatrix(_)
            | Error::InvalidWord(_)
            | Error::UnknownPreset(_)
            | Error::InvalidInput(_) => 2,
            Error::CapExceeded { .. } | Error::TooLarge { .. } => 3,
            Error::NumericalDegeneracy { .. }
            | Error::PropertyViolation(_)
            | Error::IdentityViolation(_)
            | Error::ValidationFailure(_)
            | Error::StabilizationFailure(_) => 4,
            Error::Io(_) => 1,
        }
    }
}
