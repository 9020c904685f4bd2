use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^31)")]
    NotPrime(u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit of the Laurent ring")]
    NotAUnit,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix does not have determinant 1")]
    NotUnimodular,
    #[error("letter '{0}' has no assigned matrix")]
    UnboundLetter(char),
    #[error("letter '{0}' is not in the alphabet")]
    BadLetter(char),
    #[error("ball radius {0} exceeds the maximum of 8")]
    RadiusTooLarge(u32),
    #[error("degenerate parameters: {0}")]
    DegenerateParams(&'static str),
    #[error("empty word")]
    EmptyWord,
    #[error("word trace cannot be made hyperbolic by y -> x^n, n <= {0}")]
    NotHyperbolizable(u32),
    #[error("group order exceeds the cap of {0}")]
    CapExceeded(usize),
    #[error("not a subgroup: {0}")]
    NotASubgroup(String),
    #[error("expected index 4, got {0}")]
    WrongIndex(usize),
    #[error("chain step {step} has index {index} > 4")]
    StepTooLarge { step: usize, index: usize },
    #[error("depth {depth} exceeds chain length {len}")]
    DepthExceedsChain { depth: usize, len: usize },
    #[error("element is not in the group")]
    NotInGroup,
    #[error("line {line}: loop edge at vertex {vertex}")]
    LoopEdge { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {u}-{v}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("graph has {0} vertices; exact search supports at most 40")]
    TooLarge(usize),
    #[error("vertex sequence is not a closed path in the graph")]
    NotAClosedPath,
    #[error("closed path has even length")]
    NotOdd,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
