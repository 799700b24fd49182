use thiserror::Error;

use crate::exactlin::Field;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("the coalgebra is not pointed")]
    NotPointed,

    #[error("undecidable over {field}: {reason}")]
    Undecidable { field: Field, reason: String },

    #[error("budget exceeded: {what} needs {needed}, limit is {limit}")]
    BudgetExceeded {
        what: String,
        needed: u128,
        limit: u128,
    },

    #[error("not a subcoalgebra: {0}")]
    NotSubcoalgebra(String),

    #[error("check failed: {0}")]
    CheckFailed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn budget(what: impl Into<String>, needed: u128, limit: u128) -> Self {
        Error::BudgetExceeded {
            what: what.into(),
            needed,
            limit,
        }
    }
}
