use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Failure classes shared by every module.
///
/// The CLI maps `Parse`/`Io` to exit code 2 and the remaining variants to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("order error: {0}")]
    Order(String),
    #[error("constraint error: {0}")]
    Constraint(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("signature mismatch: {0}")]
    Signature(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("refused: {0}")]
    Refused(String),
    #[error("resolution too small: {0}")]
    Resolution(String),
    #[error("too large: {0}")]
    TooLarge(String),
}

impl Error {
    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
