use std::path::PathBuf;

use thiserror::Error;

use crate::format::ParseError;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Precondition(String),
    #[error("shellability search exhausted its budget of {0} steps")]
    Budget(u64),
    #[error("{failed} of {total} checks failed")]
    VerifyFailed { failed: usize, total: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Io { .. } => 2,
            CliError::Precondition(_) => 3,
            CliError::Budget(_) => 4,
            CliError::VerifyFailed { .. } | CliError::Internal(_) => 1,
        }
    }
}

impl From<fcomplex::Error> for CliError {
    fn from(e: fcomplex::Error) -> Self {
        match e {
            fcomplex::Error::Parameters(_) | fcomplex::Error::NotPrime(_) => {
                CliError::Usage(e.to_string())
            }
            fcomplex::Error::RouteDisagreement(_) => CliError::Internal(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}
