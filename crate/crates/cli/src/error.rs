use thiserror::Error;

pub type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid scenario: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),

    #[error("cache refused: {0}")]
    Cache(String),

    #[error(transparent)]
    Core(#[from] conekahler_core::Error),
}

impl From<conekahler_core::ExprError> for CliError {
    fn from(e: conekahler_core::ExprError) -> Self {
        CliError::Core(e.into())
    }
}
