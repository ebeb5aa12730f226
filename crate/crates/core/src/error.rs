use thiserror::Error;

use crate::exactlin::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("right-hand side is not in the column span")]
    NoSolution,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(FieldSpec, FieldSpec),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("algebra is not associative")]
    NotAssociative,
    #[error("operator kind mismatch: expected {expected}")]
    KindMismatch { expected: &'static str },
    #[error("witness is not invertible")]
    NotInvertible,
    #[error("witness does not intertwine the structures ({0})")]
    NotIntertwining(String),
    #[error("map is not multiplicative on the algebra ({0})")]
    NotMultiplicative(String),
    #[error("operator fails its defining identity ({0})")]
    InvalidOperator(String),
    #[error("dendriform axioms fail ({0})")]
    InvalidDendriform(String),
    #[error("kernel of the operator is not an ideal of the domain algebra")]
    KernelNotIdeal,
    #[error("codomain algebras differ")]
    CodomainMismatch,
    #[error("isomorphism search needs a finite field")]
    FieldNotFinite,
    #[error("dimension {dim} exceeds the search cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("candidate space of {candidates} exceeds budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u64 },
    #[error("postcondition violated: {0}")]
    Postcondition(String),
    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{field}`: {reason}")]
    Schema { field: String, reason: String },
    #[error("bad rational `{0}`")]
    BadRational(String),
    #[error("I/O error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn schema(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            reason: reason.into(),
        }
    }

    pub(crate) fn dims(msg: impl Into<String>) -> Self {
        Error::DimensionMismatch(msg.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
