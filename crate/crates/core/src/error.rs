use homassoc_exact::ExactError;
use homassoc_poly::PolyError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch { context: &'static str, expected: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("{0} is not invertible")]
    NotInvertible(&'static str),
    #[error("algebra has no declared unit")]
    MissingUnit,
    #[error("unsupported cochain arity {0}")]
    UnsupportedArity(usize),
    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),
    #[error("inadmissible parameter {name}: {reason}")]
    InadmissibleParameter { name: String, reason: String },
    #[error("budget exceeded after {steps} reduction steps")]
    BudgetExceeded { steps: u64 },
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Poly(PolyError),
}

impl From<PolyError> for AlgebraError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::BudgetExceeded { steps } => AlgebraError::BudgetExceeded { steps },
            other => AlgebraError::Poly(other),
        }
    }
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
