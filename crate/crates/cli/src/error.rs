use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("schema error: {0}")]
    Schema(String),
    #[error("{field}: {source}")]
    Domain {
        field: String,
        #[source]
        source: lietrace::Error,
    },
    #[error("{0}")]
    Limit(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("property suite failed: {0}")]
    PropertyFailure(String),
}

impl CliError {
    pub fn domain(field: impl Into<String>, source: lietrace::Error) -> Self {
        CliError::Domain {
            field: field.into(),
            source,
        }
    }

    /// Process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain { .. } | CliError::Limit(_) | CliError::Io { .. } => 1,
            CliError::Parse(_) | CliError::Schema(_) => 2,
            CliError::PropertyFailure(_) => 3,
        }
    }
}
