use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate symbol `{0}` in alphabet")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("symbol id {0} is not part of the alphabet")]
    SymbolOutOfRange(u32),
    #[error("state {state} out of range (machine has {num_states} states)")]
    StateOutOfRange { state: usize, num_states: usize },
    #[error("language must contain at least two words")]
    TwoWordsRequired,
    #[error("error bound must be at least 1")]
    ZeroBound,
    #[error("family parameter must be at least 2, got {0}")]
    FamilyTooSmall(usize),
    #[error("edit operation with empty input and empty output")]
    EmptyEditOp,
    #[error("edit string has weight zero")]
    ZeroWeight,
    #[error("edit string has equal input and output parts")]
    EqualProjections,
    #[error("edit string reduction did not terminate within {0} steps")]
    ReductionDiverged(usize),
    #[error("operands are defined over different alphabets")]
    AlphabetMismatch,
    #[error("transducer carries no error-counter metadata")]
    MissingCounters,
    #[error("deadline exceeded")]
    Timeout,
    #[error("internal error: {0}")]
    Internal(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A malformed line in a Grail-style NFA description.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected 3 tokens, found {0}")]
    Arity(usize),
    #[error("malformed line: {0}")]
    Malformed(String),
    #[error("more than one start line")]
    DuplicateStart,
    #[error("no start line")]
    MissingStart,
    #[error("no transitions, alphabet would be empty")]
    EmptyAlphabet,
}
