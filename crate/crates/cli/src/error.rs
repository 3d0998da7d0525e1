use thiserror::Error;

/// Everything the command line can fail with. Each variant maps to one exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{file}:{line}:{col}: {msg}")]
    Parse { file: String, line: usize, col: usize, msg: String },
    #[error("{file}: {source}")]
    Invalid { file: String, source: dcx_core::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Compute(dcx_core::Error),
}

impl CliError {
    /// Budget and window exhaustion are "no conclusion", everything else is
    /// bad input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Compute(dcx_core::Error::RankBudgetExceeded { .. })
            | CliError::Compute(dcx_core::Error::WindowExceeded { .. }) => 3,
            _ => 1,
        }
    }
}

impl From<dcx_core::Error> for CliError {
    fn from(e: dcx_core::Error) -> Self {
        CliError::Compute(e)
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
