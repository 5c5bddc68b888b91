use thiserror::Error;

#[derive(Debug, Error)]
pub enum GenError {
    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("construction too large: {0}")]
    TooLarge(String),

    #[error(transparent)]
    Core(#[from] arbor_core::Error),
}

pub type Result<T> = std::result::Result<T, GenError>;
