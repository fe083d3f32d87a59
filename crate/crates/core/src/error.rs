use thiserror::Error;

use crate::model::Colour;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("log* is undefined below 1")]
    LogStarDomain,

    #[error("instance is not properly coloured (positions {0} and {1} share a colour)")]
    Improper(usize, usize),

    #[error("colour {colour} does not fit in palette [{size}]")]
    PaletteMismatch { colour: Colour, size: u32 },

    #[error("window of length {got} given to an algorithm expecting {expected}")]
    WindowLength { expected: usize, got: usize },

    #[error("enumeration needs {required} evaluations, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    #[error("search aborted after {nodes} nodes without a verdict")]
    NodeLimit { nodes: u64 },

    #[error("rank {rank} is outside 1..={max}")]
    RankOutOfRange { rank: u64, max: u64 },

    #[error("malformed subset: {0}")]
    MalformedSubset(String),

    #[error("colouring has no colour for realised colour {0}")]
    MissingColour(Colour),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse { line, message: message.into() }
    }

    pub(crate) fn param(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }
}
