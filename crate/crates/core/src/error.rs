use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("duplicate alphabet symbol {0:?}")]
    DuplicateSymbol(String),
    #[error("a DFA needs at least one state")]
    NoStates,
    #[error("initial state {initial} out of range (state count {states})")]
    InitialOutOfRange { initial: usize, states: usize },
    #[error("accepting state {state} out of range (state count {states})")]
    AcceptingOutOfRange { state: usize, states: usize },
    #[error("delta has {found} rows, expected {expected}")]
    DeltaRowCount { expected: usize, found: usize },
    #[error("delta row {row} has {found} columns, expected {expected}")]
    DeltaColumnCount {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error(
        "delta entry out of range: delta[{state}][{symbol}] = {target} (state count {states})"
    )]
    DeltaEntryOutOfRange {
        state: usize,
        symbol: usize,
        target: usize,
        states: usize,
    },
    #[error("symbol index {index} out of range for an alphabet of size {size}")]
    SymbolOutOfRange { index: usize, size: usize },
    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),
    #[error("alphabet mismatch: {left:?} vs {right:?}")]
    AlphabetMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },
    #[error("at least one automaton is required")]
    NoComponents,
    #[error("invalid construction parameters: {0}")]
    InvalidParameters(String),
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("malformed DFA document: {0}")]
    Parse(String),
}
