use thiserror::Error;

/// Failures surfaced by the command-line tool, each with its exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("numeric precondition violated: {0}")]
    Numeric(String),
    #[error("convergence advisory: {0}")]
    Convergence(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Convergence(_) => 4,
        }
    }
}

impl From<qzeno::Error> for CliError {
    fn from(e: qzeno::Error) -> Self {
        match e {
            qzeno::Error::Convergence(m) => CliError::Convergence(m),
            other => CliError::Numeric(other.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
