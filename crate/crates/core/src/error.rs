use core::fmt;

/// Errors produced by the divisibility engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input text was empty after trimming whitespace.
    EmptyInput,
    /// A character other than `0-9` was found at `index` (byte offset into the trimmed text).
    NonDigitCharacter {
        index: usize,
        found: char,
    },
    ChunkZero,
    /// Chunk size above [`MAX_CHUNK`](crate::MAX_CHUNK).
    ChunkOutOfRange {
        chunk: u32,
    },
    /// Modulus is zero or not below 2^63.
    ModulusOutOfRange {
        value: u64,
    },
    NotCoprimeToTen {
        modulus: u64,
    },
    /// Modulus 1 has no meaningful witness multiplier.
    TrivialModulus,
    ModulusTooLargeForScan {
        modulus: u64,
    },
    LimitTooLarge {
        limit: u64,
    },
    /// Modulus shares a factor with 10 but is not exactly 2 or 5.
    UnsupportedModulus {
        modulus: u64,
    },
    ZeroInput,
    DigitLengthZero,
    ScanLimitTooLarge {
        n_max: u64,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyInput => write!(f, "empty input"),
            Error::NonDigitCharacter { index, found } => {
                write!(f, "non-digit character {found:?} at index {index}")
            }
            Error::ChunkZero => write!(f, "chunk size must be at least 1"),
            Error::ChunkOutOfRange { chunk } => {
                write!(
                    f,
                    "chunk size {chunk} out of range 1..={}",
                    crate::MAX_CHUNK
                )
            }
            Error::ModulusOutOfRange { value } => {
                write!(f, "modulus {value} out of range 1..2^63")
            }
            Error::NotCoprimeToTen { modulus } => {
                write!(f, "modulus {modulus} is not coprime to 10")
            }
            Error::TrivialModulus => write!(f, "modulus 1 has no witness multiplier"),
            Error::ModulusTooLargeForScan { modulus } => write!(
                f,
                "modulus {modulus} too large for brute-force scan (max {})",
                crate::multiplier::MAX_SCAN_MODULUS
            ),
            Error::LimitTooLarge { limit } => write!(
                f,
                "sieve limit {limit} exceeds {}",
                crate::multiplier::MAX_SIEVE_LIMIT
            ),
            Error::UnsupportedModulus { modulus } => write!(
                f,
                "modulus {modulus} shares a factor with 10; factor it as 2^a * 5^b * m' \
                 with gcd(m', 10) = 1 and test each factor separately"
            ),
            Error::ZeroInput => write!(f, "input must be at least 1"),
            Error::DigitLengthZero => write!(f, "digit length must be at least 1"),
            Error::ScanLimitTooLarge { n_max } => write!(
                f,
                "scan limit {n_max} exceeds {}",
                crate::oracle::MAX_SCAN_N
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
