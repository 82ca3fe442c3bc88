use thiserror::Error;

use crate::front::Event;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty event word")]
    EmptyWord,

    #[error("event {index} ({event}) is out of range at sweep width {width}")]
    IndexOutOfRange {
        index: usize,
        event: Event,
        width: usize,
    },

    #[error("word ends with {0} live strands")]
    NonzeroFinalStrands(usize),

    #[error("front has {0} components, expected a knot")]
    MultiComponent(usize),

    #[error("cannot stabilize at site {site}: {reason}")]
    InvalidSite { site: usize, reason: &'static str },

    #[error("cut at boundary {boundary} has width {width}, expected 2")]
    BadCutWidth { boundary: usize, width: usize },

    #[error("split piece has {0} components")]
    DisconnectedPiece(usize),

    #[error("{crossings} crossings exceed the state-sum limit of {limit}")]
    TooManyCrossings { crossings: usize, limit: usize },

    #[error("bad token {token:?} at offset {offset}")]
    BadToken { offset: usize, token: String },

    #[error("no bucket for {0}")]
    UnknownBucket(String),

    #[error("invalid budget: {0}")]
    InvalidBudget(&'static str),

    #[error("invalid render style: {0}")]
    InvalidStyle(&'static str),

    #[error("bad polynomial {0:?}")]
    BadPolynomial(String),

    #[error("report: {0}")]
    Report(String),
}

impl Error {
    /// Errors caused by a size or resource limit rather than malformed input.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::TooManyCrossings { .. } | Error::InvalidBudget(_))
    }
}
