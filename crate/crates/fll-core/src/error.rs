use thiserror::Error;

/// Errors shared across the crate.
///
/// The variants deliberately mirror the failure modes of the public API:
/// malformed textual input, symbols outside the alphabet, length mismatches
/// between words that must be comparable, out-of-range numeric arguments,
/// enumerations that would exceed their capacity bound, and operations whose
/// mathematical preconditions (alphabet size, codebook size) are not met.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("symbol {symbol} is not in the alphabet {{0, .., {}}}", .m - 1)]
    Alphabet { symbol: u32, m: u32 },

    #[error("alphabet mismatch: one word is over Z_{left}, the other over Z_{right}")]
    AlphabetMismatch { left: u32, right: u32 },

    #[error("length mismatch: expected a word of length {expected}, got {actual}")]
    Length { expected: usize, actual: usize },

    #[error("argument out of range: {0}")]
    Range(String),

    #[error("enumeration of {required} words exceeds the cap of {cap} (raise --max-space)")]
    Capacity { required: u128, cap: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("operation needs at least two codewords")]
    Singleton,

    #[error("usage error: {0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
