use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("invalid input: {0}")]
    Input(String),

    #[error(transparent)]
    Core(#[from] arbor_core::Error),
}

pub type Result<T> = std::result::Result<T, ConstructError>;
