use thiserror::Error;

use crate::report::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input data: bad rationals, wrong JSON, inconsistent files.
    #[error("input error: {0}")]
    Input(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    /// A configured degree or dimension cap would be exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// A precondition on the structure failed; the report lists every violation.
    #[error("{what} is invalid ({} violation(s))", report.violations.len())]
    Invalid { what: String, report: ValidationReport },

    #[error("not a cocycle: {0}")]
    NotCocycle(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(what: impl Into<String>, report: ValidationReport) -> Self {
        Error::Invalid {
            what: what.into(),
            report,
        }
    }
}

pub(crate) fn ensure_valid(what: &str, report: ValidationReport) -> Result<()> {
    if report.is_valid() {
        Ok(())
    } else {
        Err(Error::invalid(what, report))
    }
}
