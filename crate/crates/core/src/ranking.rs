//! Lexicographic ranks within the bordered and unbordered listings.
//!
//! Both rank functions are total: for any word `w` of length `n` they return
//! one plus the number of class members of length `n` strictly smaller than
//! `w`, whether or not `w` itself belongs to the class. Unranking depends on
//! this when it probes padded words.

use std::fmt;

use num_bigint::BigUint;

use crate::counting::BorderCounter;
use crate::{Symbol, Word, WordClass};

/// A 1-based position in one of the two listings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rank {
    value: BigUint,
    kind: WordClass,
}

impl Rank {
    pub fn new(value: BigUint, kind: WordClass) -> Self {
        debug_assert!(value >= BigUint::from(1u32));
        Rank { value, kind }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn kind(&self) -> WordClass {
        self.kind
    }

    pub fn into_value(self) -> BigUint {
        self.value
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.value, f)
    }
}

/// Rank of `w` among the bordered words of length `|w|`.
pub fn rank_bordered(w: &Word) -> Rank {
    let mut counter = BorderCounter::new(w.alphabet(), w.len());
    let mut scratch = Vec::with_capacity(w.len());
    Rank::new(
        bordered_rank(w.symbols(), &mut counter, &mut scratch),
        WordClass::Bordered,
    )
}

/// Rank of `w` among the unbordered words of length `|w|`.
pub fn rank_unbordered(w: &Word) -> Rank {
    let mut counter = BorderCounter::new(w.alphabet(), w.len());
    let mut scratch = Vec::with_capacity(w.len());
    Rank::new(
        unbordered_rank(w.symbols(), &mut counter, &mut scratch),
        WordClass::Unbordered,
    )
}

pub fn rank(w: &Word, kind: WordClass) -> Rank {
    match kind {
        WordClass::Bordered => rank_bordered(w),
        WordClass::Unbordered => rank_unbordered(w),
    }
}

/// `1 + sum over i, c < w_i of B(w_1..w_{i-1} c, n)`.
///
/// Positions holding symbol 1 contribute nothing, which keeps probes of the
/// form `x 1^(n-i)` cheap.
pub(crate) fn bordered_rank(
    symbols: &[Symbol],
    counter: &mut BorderCounter,
    prefix: &mut Vec<Symbol>,
) -> BigUint {
    let n = symbols.len();
    let mut total = BigUint::from(1u32);
    for (i, &s) in symbols.iter().enumerate() {
        if s == 1 {
            continue;
        }
        prefix.clear();
        prefix.extend_from_slice(&symbols[..i]);
        prefix.push(0);
        for c in 1..s {
            prefix[i] = c;
            total += counter.count(prefix, n);
        }
    }
    total
}

/// `2 + sum (w_i - 1) k^(n-i) - rankB(w)`.
pub(crate) fn unbordered_rank(
    symbols: &[Symbol],
    counter: &mut BorderCounter,
    prefix: &mut Vec<Symbol>,
) -> BigUint {
    let n = symbols.len();
    let mut preceding = BigUint::from(2u32);
    for (i, &s) in symbols.iter().enumerate() {
        if s > 1 {
            preceding += counter.power(n - 1 - i) * (s - 1);
        }
    }
    preceding - bordered_rank(symbols, counter, prefix)
}

pub(crate) fn class_rank(
    symbols: &[Symbol],
    kind: WordClass,
    counter: &mut BorderCounter,
    prefix: &mut Vec<Symbol>,
) -> BigUint {
    match kind {
        WordClass::Bordered => bordered_rank(symbols, counter, prefix),
        WordClass::Unbordered => unbordered_rank(symbols, counter, prefix),
    }
}
