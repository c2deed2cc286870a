use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable files, malformed JSON, bad flags.
    #[error("input error: {0}")]
    Parse(String),
    #[error(transparent)]
    Core(#[from] ftqft_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Core(e) if e.is_size_limit() => 3,
            CliError::Core(_) => 2,
        }
    }
}
