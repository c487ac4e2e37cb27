use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter `{name}` = {value} is out of range {}", range_text(*.min, *.max))]
    OutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("parameter mismatch: (d={}, n={}) vs (d={}, n={})", .left.0, .left.1, .right.0, .right.1)]
    ParamMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("result of {len} letters exceeds the letter budget of {budget}")]
    BudgetExceeded { len: usize, budget: usize },

    #[error("path step {step} starts at {found}, expected {expected}")]
    EndpointMismatch {
        step: String,
        expected: String,
        found: String,
    },

    #[error("functor image of {edge} runs {found}, expected {expected}")]
    InconsistentFunctor {
        edge: String,
        expected: String,
        found: String,
    },

    #[error("vertex map is not a permutation")]
    NotPermutation,

    #[error("functor moves boundary vertex {0}")]
    BoundaryMoved(String),

    #[error("functor moves the basepoint to {0}")]
    BasepointMoved(String),

    #[error("path from {start} to {end} is not a loop at the basepoint")]
    NotBasepointLoop { start: String, end: String },

    #[error("inverse lift of beta_{i} does not compose to the identity on {edge}")]
    InverseCheck { i: usize, edge: String },

    #[error("closed form and conjugate form of beta_{i} differ at {generator}")]
    FormMismatch { i: usize, generator: String },

    #[error("expected {expected} generator images, got {found}")]
    ImageCount { expected: usize, found: usize },

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }

    pub(crate) fn range(name: &'static str, value: i64, min: i64, max: i64) -> Self {
        Error::OutOfRange { name, value, min, max }
    }
}

fn range_text(min: i64, max: i64) -> String {
    if max == i64::MAX {
        format!("{min}..")
    } else {
        format!("{min}..={max}")
    }
}
