use thiserror::Error;

use crate::report::CheckReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    Dimension {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("dimension {0} exceeds the supported limit of {limit}", limit = crate::MAX_DIM)]
    DimensionLimit(usize),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("representation profile mismatch: expected {expected}, found {found}")]
    Profile {
        expected: &'static str,
        found: &'static str,
    },

    #[error("{locus}: {message}")]
    Parse { locus: String, message: String },

    /// A construction or check was gated on identities that do not hold.
    #[error("precondition failed ({what}): {} violation(s)", report.violations().len())]
    Precondition { what: &'static str, report: CheckReport },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn parse(locus: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            locus: locus.into(),
            message: message.into(),
        }
    }

    pub fn is_precondition(&self) -> bool {
        matches!(self, Error::Precondition { .. })
    }
}

pub(crate) fn expect_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::Dimension {
            context,
            expected,
            found,
        })
    }
}
