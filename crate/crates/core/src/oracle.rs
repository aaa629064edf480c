//! Brute-force reference implementations.
//!
//! Everything here works straight from the definition of a border and from
//! exhaustive enumeration. None of it calls the failure-function or
//! recurrence code, so agreement between the two is meaningful.

use num_bigint::BigUint;

use crate::ranking::Rank;
use crate::word::{check_alphabet, check_length};
use crate::{Error, Result, Symbol, Word, WordClass};

/// Largest number of words any enumeration may visit.
pub const ENUMERATION_LIMIT: u64 = 1 << 24;

/// Every member of one class, in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassListing {
    length: usize,
    alphabet: u32,
    kind: WordClass,
    words: Vec<Word>,
}

impl ClassListing {
    pub fn length(&self) -> usize {
        self.length
    }

    pub fn alphabet(&self) -> u32 {
        self.alphabet
    }

    pub fn kind(&self) -> WordClass {
        self.kind
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    /// 1-based lookup.
    pub fn get(&self, rank: usize) -> Option<&Word> {
        rank.checked_sub(1).and_then(|i| self.words.get(i))
    }

    pub fn into_words(self) -> Vec<Word> {
        self.words
    }
}

fn has_border_of_length(s: &[Symbol], len: usize) -> bool {
    s[..len] == s[s.len() - len..]
}

pub fn is_bordered_naive(w: &Word) -> bool {
    let s = w.symbols();
    (1..s.len()).any(|len| has_border_of_length(s, len))
}

/// Longest border of each prefix, by trying every length.
pub fn lps_naive(w: &Word) -> Vec<usize> {
    let s = w.symbols();
    (1..=s.len())
        .map(|i| {
            (1..i)
                .rev()
                .find(|&len| has_border_of_length(&s[..i], len))
                .unwrap_or(0)
        })
        .collect()
}

pub fn unbordered_prefix_naive(w: &Word) -> Vec<bool> {
    let s = w.symbols();
    (1..=s.len())
        .map(|i| !(1..i).any(|len| has_border_of_length(&s[..i], len)))
        .collect()
}

pub fn border_indicator_naive(w: &Word) -> Vec<bool> {
    let s = w.symbols();
    (1..=s.len())
        .map(|len| len < s.len() && has_border_of_length(s, len))
        .collect()
}

fn check_instance(n: usize, k: u32) -> Result<()> {
    check_alphabet(k)?;
    check_length(n)?;
    let within = u32::try_from(n)
        .ok()
        .and_then(|n| u64::from(k).checked_pow(n))
        .is_some_and(|total| total <= ENUMERATION_LIMIT);
    if within {
        Ok(())
    } else {
        Err(Error::InstanceTooLarge {
            length: n,
            alphabet: k,
        })
    }
}

/// All `k^n` words in lexicographic order.
pub fn all_words(n: usize, k: u32) -> Result<AllWords> {
    check_instance(n, k)?;
    Ok(AllWords {
        next: Some(vec![1; n]),
        alphabet: k,
    })
}

/// Odometer over `{1..k}^n`.
#[derive(Debug, Clone)]
pub struct AllWords {
    next: Option<Vec<Symbol>>,
    alphabet: u32,
}

impl Iterator for AllWords {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        let current = self.next.take()?;
        let mut following = current.clone();
        for pos in (0..following.len()).rev() {
            if following[pos] < self.alphabet {
                following[pos] += 1;
                self.next = Some(following);
                break;
            }
            following[pos] = 1;
        }
        Some(Word::from_parts_unchecked(current, self.alphabet))
    }
}

pub fn enumerate_class(n: usize, k: u32, kind: WordClass) -> Result<ClassListing> {
    let words = all_words(n, k)?
        .filter(|w| kind.contains(is_bordered_naive(w)))
        .collect();
    Ok(ClassListing {
        length: n,
        alphabet: k,
        kind,
        words,
    })
}

pub fn count_naive(n: usize, k: u32, kind: WordClass) -> Result<BigUint> {
    let count = all_words(n, k)?
        .filter(|w| kind.contains(is_bordered_naive(w)))
        .count();
    Ok(BigUint::from(count))
}

/// One plus the number of class members strictly smaller than `w`.
pub fn rank_naive(w: &Word, kind: WordClass) -> Result<Rank> {
    let listing = enumerate_class(w.len(), w.alphabet(), kind)?;
    let below = listing.words.partition_point(|x| x < w);
    Ok(Rank::new(BigUint::from(below + 1), kind))
}

/// Bordered words of length `n` starting with `u`, by trying every completion.
pub fn count_bordered_with_prefix_naive(u: &Word, n: usize) -> Result<BigUint> {
    if u.len() > n {
        return Err(Error::PrefixTooLong {
            prefix: u.len(),
            length: n,
        });
    }
    let k = u.alphabet();
    let rest = n - u.len();
    if rest == 0 {
        return Ok(BigUint::from(is_bordered_naive(u) as u32));
    }
    let count = all_words(rest, k)?
        .filter(|tail| {
            let mut s = u.symbols().to_vec();
            s.extend_from_slice(tail.symbols());
            is_bordered_naive(&Word::from_parts_unchecked(s, k))
        })
        .count();
    Ok(BigUint::from(count))
}
