use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a poset on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("relation ({0}, {0}) would make the order reflexive")]
    SelfLoop(usize),
    #[error("relations force a cycle through vertex {0}")]
    Cycle(usize),
    #[error("vertices {0} and {1} are not comparable")]
    NotComparable(usize, usize),
    #[error("{0:?} is not a maximum antichain")]
    NotMaximumAntichain(Vec<usize>),
    #[error("{0:?} is not an antichain")]
    NotAntichain(Vec<usize>),
    #[error("antichain sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("more than {cap} results")]
    CapExceeded { cap: usize },
    #[error("presentation is not a permutation of 0..{0}")]
    BadPresentation(usize),
    #[error("poset width {width} exceeds the declared bound {bound}")]
    WidthExceeded { width: usize, bound: usize },
    #[error("coloring is not a Grundy coloring: {0}")]
    InvalidGrundy(String),
    #[error("poset with {n} vertices is too large for the exact search (limit {limit})")]
    TooLarge { n: usize, limit: usize },
    #[error("colorer broke the chain property at step {0}")]
    InvalidMove(usize),
    #[error("parameter k={k} outside 1..={w}")]
    BadK { k: usize, w: usize },
    #[error("invalid generator parameters: {0}")]
    BadParameters(String),
    #[error("construction would have {size} vertices (cap {cap})")]
    SizeCap { size: usize, cap: usize },
    #[error("local color {color} exceeds the per-level cap {cap}")]
    ColorCapExceeded { color: usize, cap: usize },
    #[error("invariant violated at step {step}: {claim}")]
    InvariantViolated { step: usize, claim: String },
    #[error("malformed input: {0}")]
    Format(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Io(e.to_string())
    }
}
