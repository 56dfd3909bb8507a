use thiserror::Error;

use tableau_corners::{BijectionError, FormulaError, PermError, TableauError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Formula(#[from] FormulaError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error(transparent)]
    Bijection(#[from] BijectionError),
    #[error(transparent)]
    Permutation(#[from] PermError),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    /// Bad parameters are usage errors; anything else is a failure.
    pub fn exit_code(&self) -> i32 {
        let tableau_usage = |e: &TableauError| matches!(e, TableauError::BoundExceeded { .. });
        let usage = match self {
            CliError::Usage(_) => true,
            CliError::Formula(FormulaError::OutOfRange(_)) => true,
            CliError::Formula(FormulaError::Tableau(e)) | CliError::Tableau(e) => tableau_usage(e),
            CliError::Bijection(BijectionError::Domain(_)) => true,
            CliError::Bijection(BijectionError::Tableau(e)) => tableau_usage(e),
            _ => false,
        };
        if usage {
            EXIT_USAGE
        } else {
            EXIT_FAIL
        }
    }
}
