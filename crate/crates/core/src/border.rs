//! Failure function and the two indicator arrays derived from it.
//!
//! Arrays are reported 1-based: entry `i` describes the prefix of length `i`
//! (or, for the border indicator, a border of length `i`).

use crate::{Symbol, Word};

/// KMP failure function: `get(i)` is the length of the longest border of
/// the length-`i` prefix, or 0 if that prefix is unbordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixBorderArray(Vec<usize>);

impl PrefixBorderArray {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// 1-based lookup. Panics if `i` is 0 or exceeds the word length.
    pub fn get(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatorRole {
    /// Bit `i` is set iff the prefix of length `i` is unbordered.
    UnborderedPrefix,
    /// Bit `i` is set iff the word has a border of length `i`.
    Border,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorArray {
    bits: Vec<bool>,
    role: IndicatorRole,
}

impl IndicatorArray {
    pub fn role(&self) -> IndicatorRole {
        self.role
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// 1-based lookup. Panics if `i` is 0 or exceeds the word length.
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn as_slice(&self) -> &[bool] {
        &self.bits
    }

    /// The bits as 0/1 integers.
    pub fn to_digits(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| b as u8).collect()
    }
}

/// Failure function over a raw symbol slice; `out[j]` describes the prefix
/// of length `j + 1`.
pub(crate) fn failure_function(symbols: &[Symbol], out: &mut Vec<usize>) {
    out.clear();
    if symbols.is_empty() {
        return;
    }
    out.push(0);
    let mut len = 0;
    for &s in &symbols[1..] {
        while len > 0 && symbols[len] != s {
            len = out[len - 1];
        }
        if symbols[len] == s {
            len += 1;
        }
        out.push(len);
    }
}

pub(crate) fn unbordered_prefix_bits(lps: &[usize], out: &mut Vec<bool>) {
    out.clear();
    out.extend(lps.iter().map(|&l| l == 0));
}

/// The borders of a word are exactly the chain `lps[n], lps[lps[n]], ...`.
pub(crate) fn border_bits(lps: &[usize], out: &mut Vec<bool>) {
    out.clear();
    out.resize(lps.len(), false);
    let mut len = lps.last().copied().unwrap_or(0);
    while len > 0 {
        out[len - 1] = true;
        len = lps[len - 1];
    }
}

pub fn compute_lps(w: &Word) -> PrefixBorderArray {
    let mut lps = Vec::with_capacity(w.len());
    failure_function(w.symbols(), &mut lps);
    PrefixBorderArray(lps)
}

pub fn unbordered_prefix_indicator(w: &Word) -> IndicatorArray {
    let lps = compute_lps(w);
    let mut bits = Vec::with_capacity(w.len());
    unbordered_prefix_bits(lps.as_slice(), &mut bits);
    IndicatorArray {
        bits,
        role: IndicatorRole::UnborderedPrefix,
    }
}

pub fn border_indicator(w: &Word) -> IndicatorArray {
    let lps = compute_lps(w);
    let mut bits = Vec::with_capacity(w.len());
    border_bits(lps.as_slice(), &mut bits);
    IndicatorArray {
        bits,
        role: IndicatorRole::Border,
    }
}

pub fn is_bordered(w: &Word) -> bool {
    compute_lps(w).get(w.len()) > 0
}

/// Length of the shortest border, if any.
pub fn shortest_border(w: &Word) -> Option<usize> {
    let lps = compute_lps(w);
    let mut len = lps.get(w.len());
    if len == 0 {
        return None;
    }
    while lps.get(len) > 0 {
        len = lps.get(len);
    }
    Some(len)
}
