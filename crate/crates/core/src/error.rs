use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("value is not divisible by {divisor} in Z[zeta]")]
    NotDivisible { divisor: i64 },
    #[error("integer overflow in cyclotomic arithmetic")]
    Overflow,
    #[error("not in Petrescu form at ({row}, {col}): {reason}")]
    NotPetrescuForm {
        row: usize,
        col: usize,
        reason: String,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown search engine `{0}`")]
    UnknownEngine(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
