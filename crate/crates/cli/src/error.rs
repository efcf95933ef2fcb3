use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Core(#[from] sovhopf::Error),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("character `{0}` is not sovereign: {1}")]
    NotSovereign(String, String),
}

impl CliError {
    /// `NotSovereign` is a verification outcome; everything else is an input
    /// error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::NotSovereign(..) => 1,
            _ => 3,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub(crate) fn schema(msg: impl Into<String>) -> CliError {
    CliError::Schema(msg.into())
}
