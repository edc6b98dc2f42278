use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division left a nonzero remainder.
    #[error("not divisible: remainder term {remainder}")]
    NotDivisible { remainder: String },

    /// A rational function whose denominator does not divide its numerator.
    #[error("rational function is not a Laurent polynomial")]
    NotPolynomial,

    /// Evaluation hit a pole that survives reduction.
    #[error("pole at t = 1")]
    Pole,

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("exponent {0} is not an integer")]
    HalfIntegerExponent(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("unknown builtin knot {0:?}")]
    UnknownBuiltin(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// A record violates one of its invariants; the message names it.
    #[error("validation error: {0}")]
    Validation(String),

    /// A closed formula produced a value that contradicts one of its proven
    /// properties. Always a bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn internal(context: &str, err: Error) -> Error {
        match err {
            Error::Internal(msg) => Error::Internal(msg),
            other => Error::Internal(format!("{context}: {other}")),
        }
    }

    /// True for errors that indicate a broken identity rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::NotDivisible { .. } | Error::NotPolynomial | Error::Pole
        )
    }
}
