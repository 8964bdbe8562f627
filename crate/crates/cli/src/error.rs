use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Verify(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Precondition(_) | CliError::Io { .. } => 2,
            CliError::Verify(_) => 3,
        }
    }
}

impl From<gca_algorithms::AlgError> for CliError {
    fn from(e: gca_algorithms::AlgError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<gca_core::EngineError> for CliError {
    fn from(e: gca_core::EngineError) -> Self {
        CliError::Precondition(e.to_string())
    }
}

impl From<gca_archsim::ArchError> for CliError {
    fn from(e: gca_archsim::ArchError) -> Self {
        CliError::Precondition(e.to_string())
    }
}
