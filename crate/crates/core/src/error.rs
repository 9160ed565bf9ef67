use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("binomial coefficient with negative upper argument {0}")]
    NegativeBinomial(i64),

    #[error("expected an integer result for {context}, got {value}")]
    NonIntegral { context: String, value: String },

    #[error("series composition requires an inner series with zero constant term")]
    NonzeroConstantTerm,

    #[error("polynomial is not divisible by x (constant term {0})")]
    NotDivisibleByX(String),

    #[error("permutation is empty")]
    EmptyPermutation,

    #[error("not a permutation of 1..={0}")]
    InvalidPermutation(usize),

    #[error("barred weight needs exactly one bar, got {0}")]
    BarCount(usize),

    #[error("a run of elements greater than {n} is not increasing at position {position}")]
    RunNotIncreasing { n: usize, position: usize },

    #[error("word entry {value} at position {position} exceeds {n}")]
    WordOutOfRange {
        n: usize,
        position: usize,
        value: usize,
    },

    #[error("{0}")]
    Precondition(String),

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("range rejected for {identity}: {reason}")]
    DomainViolation { identity: String, reason: String },

    #[error("b-file line {line}: {message}")]
    BFileParse { line: usize, message: String },

    #[error("no fixture for sequence {0}")]
    FixtureMissing(String),

    #[error("depth {depth} exceeds the {available} entries available for {id}")]
    DepthExceeded {
        id: String,
        depth: usize,
        available: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
