use std::io;

/// Errors reported by index construction and the CLI front end.
///
/// The CLI maps these onto process exit codes: invalid input is 1, I/O
/// failures are 2, internal invariant violations are 3.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("position {pos} out of range [1,{n}]")]
    PositionOutOfRange { pos: usize, n: usize },

    #[error("duplicate position {pos}")]
    DuplicatePosition { pos: usize },

    #[error("symbol {symbol} outside alphabet [0,{sigma})")]
    SymbolOutOfRange { symbol: u64, sigma: u64 },

    #[error("substring bounds reversed: a={a} > b={b}")]
    SubstringBounds { a: usize, b: usize },

    #[error("fingerprints belong to different repetitions ({0} vs {1})")]
    RepetitionMismatch(usize, usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("{0}")]
    Parse(String),

    #[error("oracle refused: n*b = {nb} exceeds guard limit {limit}")]
    OracleRefused { nb: u128, limit: u128 },

    #[error("internal invariant violation: {0}")]
    Internal(String),

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    /// Process exit code the CLI uses for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Io(_) => 2,
            Error::Internal(_) => 3,
            _ => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
