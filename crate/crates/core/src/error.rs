use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a permutation of 0..{len}: {nodes:?}")]
    NotPermutation { nodes: Vec<usize>, len: usize },

    #[error("path must visit at least {min} nodes, got {len}")]
    PathTooShort { len: usize, min: usize },

    #[error("invalid path difference {diff} for word length {len}")]
    InvalidDifference { diff: i32, len: usize },

    #[error("invalid step {step} for word length {len}")]
    InvalidStep { step: i32, len: usize },

    #[error("{first:?} and {second:?} are not anagrams")]
    NotAnAnagram { first: String, second: String },

    #[error("word {word:?} contains characters outside A-Z")]
    InvalidWord { word: String },

    #[error("word length {len} is below the minimum star length of 5")]
    WordTooShort { len: usize },

    #[error("{count} paths exceed the cap of {cap}")]
    PathCountExceedsCap { count: u64, cap: u64 },

    #[error("path count does not fit in 64 bits")]
    PathCountOverflow,

    #[error("step {step} is not a valid perfect edge for word length {len}")]
    InvalidEdgeLength { step: i32, len: usize },

    #[error("{value} has no inverse modulo {modulus}")]
    NoInverse { value: i64, modulus: i64 },

    #[error("path is not a star path")]
    NotAStar,

    #[error("word length {len} outside the supported range {min}..={max}")]
    UnsupportedLength { len: usize, min: usize, max: usize },

    #[error("word list is empty")]
    EmptyWordList,

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
