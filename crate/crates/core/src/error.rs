use thiserror::Error;

/// Errors raised by tournament construction, transforms and checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pair {{{0}, {1}}} is listed more than once")]
    DuplicatePair(usize, usize),
    #[error("pair {{{0}, {1}}} is not oriented")]
    MissingPair(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("endpoints coincide at vertex {0}")]
    SameVertex(usize),
    #[error("order {0} is outside the supported range 1..=26")]
    OrderTooLarge(usize),
    #[error("vertex set contains {index}, outside order {order}")]
    SOutOfRange { index: usize, order: usize },
    #[error("cannot delete every vertex of the tournament")]
    SIsEverything,
    #[error("no arc {0} -> {1}")]
    NoSuchArc(usize, usize),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("role {name:?}: {message}")]
    InvalidRole { name: String, message: String },
    #[error("degree fact violated: clause ({0})")]
    FactViolated(&'static str),
    #[error("regular completion failed: {0}")]
    EmbedFailed(String),
    #[error("semidegree window [{lo}, {hi}] not reached for order {order}")]
    WindowInfeasible { order: usize, lo: usize, hi: usize },
    #[error("unknown counterexample variant {0} (expected 7, 9, 11 or 15)")]
    InvalidVariant(usize),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

pub type Result<T> = std::result::Result<T, Error>;
