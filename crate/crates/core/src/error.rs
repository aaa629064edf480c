use num_bigint::BigUint;
use thiserror::Error;

use crate::WordClass;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(u32),

    #[error("words must have length at least 1")]
    EmptyWord,

    /// `position` is 1-based.
    #[error("symbol {symbol} at position {position} is outside 1..={alphabet}")]
    InvalidSymbol {
        symbol: u32,
        position: usize,
        alphabet: u32,
    },

    #[error("prefix of length {prefix} is longer than the target length {length}")]
    PrefixTooLong { prefix: usize, length: usize },

    #[error("rank {rank} is outside 1..={count}")]
    RankOutOfRange { rank: BigUint, count: BigUint },

    #[error("there are no {kind} words of length {length} over {alphabet} letters")]
    EmptyClass {
        kind: WordClass,
        length: usize,
        alphabet: u32,
    },

    #[error("{alphabet}^{length} words exceeds the enumeration limit of 2^24")]
    InstanceTooLarge { length: usize, alphabet: u32 },
}

impl Error {
    /// Stable variant name, used in CLI diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::AlphabetTooSmall(_) => "AlphabetTooSmall",
            Error::EmptyWord => "EmptyWord",
            Error::InvalidSymbol { .. } => "InvalidSymbol",
            Error::PrefixTooLong { .. } => "PrefixTooLong",
            Error::RankOutOfRange { .. } => "RankOutOfRange",
            Error::EmptyClass { .. } => "EmptyClass",
            Error::InstanceTooLarge { .. } => "InstanceTooLarge",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
