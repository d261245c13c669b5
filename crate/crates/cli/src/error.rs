use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("malformed input: {0}")]
    Input(String),

    /// A verification or cross-check found a disagreement.
    #[error("{0}")]
    Failed(String),

    #[error(transparent)]
    Core(#[from] coxfactor::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Failed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Input(_) => 3,
            CliError::Core(coxfactor::Error::Internal(_)) => 1,
            CliError::Core(_) => 3,
            CliError::Io(_) => 1,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
