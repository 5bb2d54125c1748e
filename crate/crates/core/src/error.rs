use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid permutation {0:?}: letters must be a bijection onto 1..=n")]
    InvalidPermutation(Vec<u32>),

    #[error("cannot parse permutation from {0:?}")]
    ParsePermutation(String),

    #[error("words are not disjoint: letter {0} appears in both")]
    NotDisjoint(u32),

    #[error("pattern {0} has length < 2")]
    PatternTooShort(String),

    #[error("word {0:?} in the marked set has length < 2")]
    WordTooShort(String),

    #[error("pattern set must not be empty")]
    EmptyPatternSet,

    #[error("series is not invertible: zero constant term")]
    NotInvertible,

    #[error("Hadamard inverse does not exist: slice at t^{0} is not invertible")]
    HadamardNotInvertible(u32),

    #[error("unbounded substitution: {0}")]
    UnboundedSubstitution(String),

    #[error("operation requires a truncation bound on {0}")]
    Unbounded(&'static str),

    #[error("coefficient of {monomial} lies beyond the truncation {truncation}")]
    BeyondTruncation {
        monomial: String,
        truncation: String,
    },

    #[error("square root requires zero constant term in f for sqrt(1+f)")]
    SqrtConstantTerm,

    #[error("tail not cleared when extracting degree {n}: {detail}")]
    TailNotCleared { n: usize, detail: String },

    #[error("non-polynomial residue when extracting degree {n}: {detail}")]
    NonPolynomialResidue { n: usize, detail: String },

    #[error("coefficient {0} is not an integer")]
    NonInteger(String),

    #[error("invalid q-binomial arguments n={n}, k={k}")]
    InvalidBinomial { n: i64, k: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown formula {name:?}; known formulas: {known}")]
    UnknownFormula { name: String, known: String },

    #[error("unknown table {id}; valid ids are 1..=11")]
    UnknownTable { id: usize },

    #[error("n = {n} exceeds the brute-force safety cap {cap}; pass --allow-large to override")]
    SafetyCap { n: usize, cap: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
