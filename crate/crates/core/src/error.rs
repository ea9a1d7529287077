use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    LetterOutOfRange { index: i64, rank: usize },

    #[error("basis mismatch: rank {left} vs rank {right}")]
    BasisMismatch { left: usize, right: usize },

    #[error("rank must be at least {min}, got {rank}")]
    RankTooSmall { rank: usize, min: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not folded: vertex {vertex} has two {direction} edges labeled g{label}")]
    NotFolded {
        vertex: usize,
        label: usize,
        direction: &'static str,
    },

    #[error("hull-core is empty (trivial subgroup)")]
    EmptyHull,

    #[error("vertex {vertex} does not exist")]
    NoSuchVertex { vertex: usize },

    #[error("radius {radius} exceeds the configured maximum {max}")]
    RadiusTooLarge { radius: usize, max: usize },

    #[error("enumerating radius-{radius} round-graphs in rank {rank} would produce {count} graphs (limit {limit})")]
    EnumerationTooLarge {
        rank: usize,
        radius: usize,
        count: u128,
        limit: u128,
    },

    #[error("radius mismatch: {left} vs {right}")]
    RadiusMismatch { left: usize, right: usize },

    #[error("invalid round-graph: {0}")]
    InvalidRoundGraph(String),

    #[error("weight system not admissible: matching row for generator g{generator}, lens {lens} has {lhs} on the id side and {rhs} on the translated side")]
    Inadmissible {
        generator: usize,
        lens: String,
        lhs: String,
        rhs: String,
    },

    #[error("invalid weight system: {0}")]
    InvalidWeightSystem(String),

    #[error("invalid quotient graph: {0}")]
    InvalidQuotient(String),

    #[error("no nonnegative kernel point on the support of the target")]
    Infeasible,

    #[error("closest kernel point is at max-distance {achieved}, not below tolerance {tolerance}")]
    ToleranceNotMet { achieved: String, tolerance: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for errors caused by malformed textual input rather than domain violations.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }

    /// Re-reports any error as a parse error at `line` of an input file.
    pub fn at_line(self, line: usize) -> Error {
        let message = match self {
            Error::Parse { message, .. } => message,
            other => other.to_string(),
        };
        Error::Parse { line, message }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
