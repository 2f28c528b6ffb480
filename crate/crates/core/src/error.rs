use thiserror::Error;

/// Failure classes shared by every module. The CLI maps each variant onto a
/// distinct exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Arguments outside an operation's documented domain.
    #[error("invalid input: {0}")]
    Input(String),
    /// Malformed text input (graph, coloring, rational, weights).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    /// The request is well-formed but beyond what exhaustive methods handle.
    #[error("capability exceeded: {0}")]
    Capability(String),
    /// An algorithm precondition or postcondition failed on the supplied data.
    #[error("contract violation: {0}")]
    Contract(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn capability(msg: impl Into<String>) -> Self {
        Error::Capability(msg.into())
    }

    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
