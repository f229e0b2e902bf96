use alloc::string::String;
use core::fmt;

/// Errors surfaced by the library.
///
/// `OracleMismatch` is special: it means two independent derivations of the
/// same quantity disagreed. It always carries the full instance data so a
/// failing case can be replayed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unknown preset name or invalid preset parameters.
    BadPreset(String),
    /// Structural validation of a root datum failed.
    BadDatum(String),
    /// An operation was called with inputs outside its precondition.
    BadInput(String),
    /// Enumeration window exhausted before closure was certified.
    WindowExhausted(String),
    /// Two independent derivations of the same value disagree.
    OracleMismatch(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadPreset(m) => write!(f, "bad preset: {m}"),
            Error::BadDatum(m) => write!(f, "bad root datum: {m}"),
            Error::BadInput(m) => write!(f, "bad input: {m}"),
            Error::WindowExhausted(m) => write!(f, "enumeration window exhausted: {m}"),
            Error::OracleMismatch(m) => write!(f, "oracle mismatch: {m}"),
        }
    }
}

#[cfg(test)]
impl std::error::Error for Error {}
