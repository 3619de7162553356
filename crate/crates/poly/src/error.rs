use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("polynomials live in different rings or orders")]
    RingMismatch,
    #[error("no generators given")]
    EmptyGenerators,
    #[error("budget exceeded after {steps} reduction steps")]
    BudgetExceeded { steps: u64 },
}
