use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    MixedFields,
    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("the discarded span is not an ideal")]
    NotAnIdeal,
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("family spec mismatch: {0}")]
    SpecMismatch(String),
    #[error("a required root does not exist in the field: {0}")]
    SqrtUnavailable(String),
    #[error("family kinds differ")]
    KindMismatch,
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("unsupported dimension {0}")]
    UnsupportedDim(usize),
    #[error("field has no square root of -1")]
    FieldLacksI,
    #[error("matrix is singular")]
    Singular,
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
}

impl Error {
    pub(crate) fn syntax(message: impl Into<String>) -> Self {
        Error::Syntax {
            line: 1,
            column: 1,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
