use thiserror::Error;

/// Errors raised by state construction, channel evaluation and the
/// quantifier/relation machinery.
///
/// Every variant renders as a single `Kind: detail` line so the CLI can
/// forward it verbatim as its diagnostic.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("NonPhysical: eigenvalue {min_eigenvalue}")]
    NonPhysical { min_eigenvalue: f64 },

    #[error("NonPhysical: {0}")]
    InvalidState(String),

    #[error("OutOfRange: {name} = {value} not in [0, 1]")]
    OutOfRange { name: &'static str, value: f64 },

    #[error("NumericalFailure: {0}")]
    NumericalFailure(&'static str),

    #[error("DegenerateOrdering: |r{first}| = |r{second}|")]
    DegenerateOrdering { first: usize, second: usize },

    #[error("NotEntangled: initial state is separable, no sudden death")]
    NotEntangled,

    #[error("BranchUnknown: the active branch must be supplied")]
    BranchUnknown,

    #[error("WindowViolation: {0}")]
    WindowViolation(String),

    #[error("EmptyWindow: initial state is separable, the discord-entanglement curve is empty")]
    EmptyWindow,

    #[error("ConfigError: {0}")]
    Config(String),

    #[error("IoError: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
