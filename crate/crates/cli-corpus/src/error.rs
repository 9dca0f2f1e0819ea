use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("constructor error: {0}")]
    Constructor(String),

    #[error("corpus line {line}: {message}")]
    Corpus { line: usize, message: String },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Core(#[from] permgroup_core::Error),
}
