use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed graph6 input.
    #[error("graph6 format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    /// Malformed line-oriented input.
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),

    /// An exponential computation was requested beyond its configured guard.
    #[error("{what}: size {size} exceeds the guard of {limit} (override the guard to proceed)")]
    Scale {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// An internal consistency check failed.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    /// The M(G) count differed between two qualifying maximum matchings.
    #[error("M(G) is not well defined: {0}")]
    WellDefinedness(String),

    /// A checked theorem statement failed on a concrete graph.
    #[error("theorem violated: {0}")]
    TheoremViolation(String),

    #[error("unknown check name: {0}")]
    UnknownCheck(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Whether exponential-cost guards are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Guard {
    #[default]
    Enforce,
    /// Caller accepts the cost of running past the configured size limits.
    Override,
}

impl Guard {
    pub(crate) fn check(self, what: &'static str, size: usize, limit: usize) -> Result<()> {
        if self == Guard::Enforce && size > limit {
            return Err(Error::Scale { what, size, limit });
        }
        Ok(())
    }
}
