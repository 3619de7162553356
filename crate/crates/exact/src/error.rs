use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("dimension mismatch in {op}: expected {expected}, found {found}")]
    DimensionMismatch { op: &'static str, expected: usize, found: usize },
    #[error("malformed scalar `{0}`")]
    Parse(String),
}
