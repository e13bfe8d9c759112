use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("invalid equivalence data: {0}")]
    InvalidEquivalence(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("inadmissible labelling: {0}")]
    Inadmissible(String),
    #[error("method {method} not applicable: {reason}")]
    MethodNotApplicable { method: String, reason: String },
    #[error("enumeration budget exceeded: {needed} items requested, budget {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
