use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("parse error at token `{token}`: {reason}")]
    Parse { token: String, reason: &'static str },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(&'static str),

    #[error("invalid chord diagram: {0}")]
    InvalidDiagram(&'static str),

    #[error("operation requires a nonempty permutation")]
    EmptyPermutation,

    #[error("position {position} out of range for a permutation of {k} elements")]
    PositionOutOfRange { position: usize, k: usize },

    #[error("expected {expected} parities, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("superalgebra signatures differ: gl({0}|{1}) vs gl({2}|{3})")]
    SignatureMismatch(usize, usize, usize, usize),

    #[error("work estimate {required} exceeds budget {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("Casimir index must be at least 1, got {0}")]
    CasimirIndex(usize),
}

pub type Result<T> = core::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: &str, reason: &'static str) -> Self {
        Error::Parse {
            token: token.into(),
            reason,
        }
    }
}
