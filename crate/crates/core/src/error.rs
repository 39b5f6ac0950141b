use thiserror::Error;

/// Errors raised by the library operations.
///
/// Variant names double as the stable error names printed by the CLI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MissingPair: pair {{{0},{1}}} has no orientation")]
    MissingPair(usize, usize),
    #[error("ConflictingArcs: pair {{{0},{1}}} is oriented both ways")]
    ConflictingArcs(usize, usize),
    #[error("IndexOutOfRange: vertex {index} not in [0,{n})")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("SelfArc: arc ({0},{0})")]
    SelfArc(usize),
    #[error("EmptySubset: subset must be nonempty")]
    EmptySubset,
    #[error("DuplicateIndex: vertex {0} listed twice")]
    DuplicateIndex(usize),
    #[error("SizeMismatch: {0} vs {1} vertices")]
    SizeMismatch(usize, usize),
    #[error("TooFewVertices: need at least {needed}, got {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("ZeroVertices: vertex count must be positive")]
    ZeroVertices,
    #[error("TooLarge: n = {n} exceeds the limit {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("InvalidScore: score {score} exceeds n-1 = {max}")]
    InvalidScore { score: usize, max: usize },
    #[error("NotRealizable: sequence fails Landau's condition ({0})")]
    NotRealizable(String),
    #[error("HasEmperor: vertex {0} beats every other vertex")]
    HasEmperor(usize),
    #[error("HypothesisViolated: neither ({0},{1}) nor ({1},{0}) is an arc")]
    HypothesisViolated(usize, usize),
    #[error("NotAntisymmetric: value({0},{1}) != -value({1},{0})")]
    NotAntisymmetric(usize, usize),
    #[error("NotSelectionFlow: value({0},{1}) = {2} is not +1 or -1")]
    NotSelectionFlow(usize, usize, i64),
    #[error("WrongOrder: {0}")]
    WrongOrder(String),
    #[error("BadParameters: {0}")]
    BadParameters(String),
    #[error("BudgetExceeded: search stopped after {0} nodes, result inconclusive")]
    BudgetExceeded(u64),
    #[error("ParseError: {0}")]
    Parse(String),
}

impl Error {
    /// The bare variant name, e.g. `"MissingPair"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::MissingPair(..) => "MissingPair",
            Error::ConflictingArcs(..) => "ConflictingArcs",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::SelfArc(_) => "SelfArc",
            Error::EmptySubset => "EmptySubset",
            Error::DuplicateIndex(_) => "DuplicateIndex",
            Error::SizeMismatch(..) => "SizeMismatch",
            Error::TooFewVertices { .. } => "TooFewVertices",
            Error::ZeroVertices => "ZeroVertices",
            Error::TooLarge { .. } => "TooLarge",
            Error::InvalidScore { .. } => "InvalidScore",
            Error::NotRealizable(_) => "NotRealizable",
            Error::HasEmperor(_) => "HasEmperor",
            Error::HypothesisViolated(..) => "HypothesisViolated",
            Error::NotAntisymmetric(..) => "NotAntisymmetric",
            Error::NotSelectionFlow(..) => "NotSelectionFlow",
            Error::WrongOrder(_) => "WrongOrder",
            Error::BadParameters(_) => "BadParameters",
            Error::BudgetExceeded(_) => "BudgetExceeded",
            Error::Parse(_) => "ParseError",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
