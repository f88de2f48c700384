use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("consecutive points {0} and {1} differ in both coordinates")]
    NonRectilinear(String, String),
    #[error("a path needs at least one point")]
    EmptyPath,
    #[error("path reverses direction at {0}")]
    Backtrack(String),
    #[error("subsegments are not mutually visible from the given lanes")]
    NotMutuallyVisible,
    #[error("vertex sets differ: only in representation {only_rep:?}, only in graph {only_graph:?}")]
    VertexMismatch { only_rep: Vec<String>, only_graph: Vec<String> },
    #[error("vertices {0:?} do not induce a 4-cycle")]
    NotInducedFourCycle(Vec<String>),
    #[error("invalid clique cover: {0}")]
    InvalidCover(String),
    #[error("invalid vertex order: {0}")]
    InvalidOrder(String),
    #[error("invalid build sequence: {0}")]
    InvalidSequence(String),
    #[error("could not find a build sequence of width {0}")]
    WidthExceeded(usize),
    #[error("width must be at least 1, got {0}")]
    WidthTooSmall(usize),
    #[error("m must be at least {min}, got {m}")]
    MTooSmall { m: usize, min: usize },
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("line {0} repeats a variable within its clause")]
    DuplicateLiteral(usize),
    #[error("line {line} has {found} literals, expected 3")]
    ArityError { line: usize, found: usize },
    #[error("assignment does not satisfy the formula: {0}")]
    AssignmentInvalid(String),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
