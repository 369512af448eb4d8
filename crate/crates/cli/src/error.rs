use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: file not found", .0.display())]
    FileNotFound(PathBuf),

    #[error("{0}")]
    Io(#[from] std::io::Error),

    #[error("schema error in `{field}`: {reason}")]
    Schema { field: String, reason: String },

    #[error("{file}: `{key}`: syntax error at position {position}: expected {expected}")]
    Syntax {
        file: String,
        key: String,
        position: usize,
        expected: String,
    },

    #[error(transparent)]
    Core(#[from] cyclor::Error),
}

impl CliError {
    pub(crate) fn schema(field: impl Into<String>, reason: impl Into<String>) -> Self {
        CliError::Schema {
            field: field.into(),
            reason: reason.into(),
        }
    }

    /// 1 when a construction condition failed, 2 for anything wrong with the input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(cyclor::Error::ConditionViolated { .. }) => 1,
            _ => 2,
        }
    }
}
