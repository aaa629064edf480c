use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use crate::{Error, Result};

/// A letter of the alphabet `{1, ..., k}`.
pub type Symbol = u32;

/// Selects the bordered or the unbordered listing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordClass {
    Bordered,
    Unbordered,
}

impl WordClass {
    pub fn contains(self, bordered: bool) -> bool {
        match self {
            WordClass::Bordered => bordered,
            WordClass::Unbordered => !bordered,
        }
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordClass::Bordered => "bordered",
            WordClass::Unbordered => "unbordered",
        })
    }
}

impl FromStr for WordClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "bordered" => Ok(WordClass::Bordered),
            "unbordered" => Ok(WordClass::Unbordered),
            other => Err(format!("unknown word class `{other}`")),
        }
    }
}

/// A non-empty word over `{1, ..., k}` with `k >= 2`.
///
/// Ordering is lexicographic on the symbols, which is the listing order for
/// words of equal length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    symbols: Vec<Symbol>,
    alphabet: u32,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, alphabet: u32) -> Result<Self> {
        check_alphabet(alphabet)?;
        if symbols.is_empty() {
            return Err(Error::EmptyWord);
        }
        if let Some((i, &s)) = symbols
            .iter()
            .enumerate()
            .find(|&(_, &s)| s == 0 || s > alphabet)
        {
            return Err(Error::InvalidSymbol {
                symbol: s,
                position: i + 1,
                alphabet,
            });
        }
        Ok(Word { symbols, alphabet })
    }

    /// `1^n`, the first word of length `n`.
    pub fn smallest(length: usize, alphabet: u32) -> Result<Self> {
        Word::new(vec![1; length], alphabet)
    }

    /// `k^n`, the last word of length `n`.
    pub fn largest(length: usize, alphabet: u32) -> Result<Self> {
        Word::new(vec![alphabet; length], alphabet)
    }

    pub(crate) fn from_parts_unchecked(symbols: Vec<Symbol>, alphabet: u32) -> Self {
        debug_assert!(Word::new(symbols.clone(), alphabet).is_ok());
        Word { symbols, alphabet }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    /// Position among all `k^n` words of the same length, 1-based.
    pub fn lex_rank(&self) -> BigUint {
        let k = BigUint::from(self.alphabet);
        let offset = self
            .symbols
            .iter()
            .fold(BigUint::ZERO, |acc, &s| acc * &k + (s - 1));
        offset + 1u32
    }
}

pub(crate) fn check_alphabet(alphabet: u32) -> Result<()> {
    if alphabet < 2 {
        Err(Error::AlphabetTooSmall(alphabet))
    } else {
        Ok(())
    }
}

pub(crate) fn check_length(length: usize) -> Result<()> {
    if length == 0 {
        Err(Error::EmptyWord)
    } else {
        Ok(())
    }
}
