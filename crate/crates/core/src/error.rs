use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol out of alphabet: {symbol} is not below q={q}")]
    SymbolOutOfAlphabet { symbol: u64, q: u32 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid parameters: {field} {reason}")]
    InvalidParams { field: &'static str, reason: String },

    #[error("empty word")]
    EmptyWord,

    #[error("p not invertible modulo q (p={p}, q={q})")]
    NotInvertible { p: u32, q: u32 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("enumeration too large: {size} words exceeds budget {budget}")]
    EnumerationTooLarge { size: u128, budget: u64 },

    #[error("too short: need at least {needed} symbols, got {got}")]
    TooShort { needed: usize, got: usize },

    #[error("index out of range: {index} not in 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("uncorrectable input: {0}")]
    Uncorrectable(String),

    #[error("not decodable: {0}")]
    NotDecodable(String),
}
