//! Exact counts of bordered words, optionally constrained to a prefix.
//!
//! `B(u, m)` is the number of length-`m` bordered words that start with `u`.
//! Classifying each such word by its shortest border `v` (unbordered, and at
//! most half the word) splits the count into two regimes, with `p = |u|`:
//!
//! * `m <= 2p`: `v` is an unbordered prefix of `u`. If `|v| <= m - p` the
//!   middle is free, giving `k^(m-p-|v|)` words; otherwise the trailing copy
//!   of `v` overlaps `u` and the word is fixed, bordered iff `u` has a border
//!   of length `|v| - (m - p)`.
//! * `m > 2p`: either `v` is an unbordered prefix of `u` as before, or `u` is
//!   a prefix of `v`, in which case there are `k^(|v|-p) - B(u, |v|)` choices
//!   of `v` and `k^(m - 2|v|)` choices for the middle.
//!
//! The second regime only refers to `B(u, i)` with `i <= m/2`, so one pass
//! over increasing lengths fills everything that is needed.

use num_bigint::BigUint;

use crate::border::{border_bits, failure_function, unbordered_prefix_bits};
use crate::word::{check_alphabet, check_length};
use crate::{Error, Result, Symbol, Word, WordClass};

/// `B(u, i)` for every `i` in `p..=n`, where `p = |u|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderCountTable {
    base_length: usize,
    values: Vec<BigUint>,
}

impl BorderCountTable {
    pub fn base_length(&self) -> usize {
        self.base_length
    }

    pub fn target_length(&self) -> usize {
        self.base_length + self.values.len() - 1
    }

    /// `B(u, length)`, or `None` outside `p..=n`.
    pub fn get(&self, length: usize) -> Option<&BigUint> {
        length
            .checked_sub(self.base_length)
            .and_then(|j| self.values.get(j))
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Working storage for repeated `B(u, n)` evaluations with a fixed alphabet.
///
/// Holds the powers of `k`, the indicator arrays of the current prefix and
/// the DP row. Nothing computed for one prefix is reused for the next.
#[derive(Debug)]
pub(crate) struct BorderCounter {
    alphabet: u32,
    /// `log2 k` when `k` is a power of two, so scaling is a shift.
    shift: Option<u32>,
    powers: Vec<BigUint>,
    lps: Vec<usize>,
    unbordered: Vec<bool>,
    border: Vec<bool>,
    /// `table[j] = B(u, p + 1 + j)`.
    table: Vec<BigUint>,
}

impl BorderCounter {
    pub(crate) fn new(alphabet: u32, max_length: usize) -> Self {
        debug_assert!(alphabet >= 2);
        let mut counter = BorderCounter {
            alphabet,
            shift: alphabet
                .is_power_of_two()
                .then(|| alphabet.trailing_zeros()),
            powers: vec![BigUint::from(1u32)],
            lps: Vec::with_capacity(max_length),
            unbordered: Vec::with_capacity(max_length),
            border: Vec::with_capacity(max_length),
            table: Vec::with_capacity(max_length / 2),
        };
        counter.ensure_powers(max_length);
        counter
    }

    pub(crate) fn alphabet(&self) -> u32 {
        self.alphabet
    }

    /// `k^e`; `e` must not exceed the largest length seen so far.
    pub(crate) fn power(&self, e: usize) -> &BigUint {
        &self.powers[e]
    }

    fn ensure_powers(&mut self, max_exponent: usize) {
        while self.powers.len() <= max_exponent {
            let next = self.powers.last().unwrap() * self.alphabet;
            self.powers.push(next);
        }
    }

    fn scale(&self, x: BigUint, exponent: usize) -> BigUint {
        match self.shift {
            Some(s) => x << (s as usize * exponent),
            None => x * &self.powers[exponent],
        }
    }

    fn load_prefix(&mut self, prefix: &[Symbol], n: usize) {
        debug_assert!(!prefix.is_empty() && prefix.len() <= n);
        self.ensure_powers(n);
        failure_function(prefix, &mut self.lps);
        unbordered_prefix_bits(&self.lps, &mut self.unbordered);
        border_bits(&self.lps, &mut self.border);
        self.table.clear();
    }

    /// `B(prefix, n)`.
    pub(crate) fn count(&mut self, prefix: &[Symbol], n: usize) -> BigUint {
        let p = prefix.len();
        self.load_prefix(prefix, n);
        for m in p + 1..=n / 2 {
            let value = self.evaluate(p, m);
            self.table.push(value);
        }
        self.evaluate(p, n)
    }

    fn table_for(&mut self, prefix: &[Symbol], n: usize) -> BorderCountTable {
        let p = prefix.len();
        self.load_prefix(prefix, n);
        let base = self.evaluate(p, p);
        for m in p + 1..=n {
            let value = self.evaluate(p, m);
            self.table.push(value);
        }
        let mut values = Vec::with_capacity(n - p + 1);
        values.push(base);
        values.append(&mut self.table);
        BorderCountTable {
            base_length: p,
            values,
        }
    }

    /// `B(u, m)` given the loaded prefix of length `p` and `B(u, i)` for
    /// `p < i <= m/2` in the table.
    fn evaluate(&self, p: usize, m: usize) -> BigUint {
        let a = &self.unbordered;
        let half = m / 2;
        let mut total = BigUint::ZERO;
        if m <= 2 * p {
            let free = m - p;
            for i in 1..=free {
                if a[i - 1] {
                    total += &self.powers[free - i];
                }
            }
            let overlapping = (free + 1..=half)
                .filter(|&i| a[i - 1] && self.border[i - free - 1])
                .count();
            total + overlapping
        } else {
            for i in 1..=p {
                if a[i - 1] {
                    total += &self.powers[m - p - i];
                }
            }
            for i in p + 1..=half {
                let unbordered = &self.powers[i - p] - &self.table[i - p - 1];
                total += self.scale(unbordered, m - 2 * i);
            }
            total
        }
    }
}

/// Number of length-`n` bordered words that have `u` as a prefix.
pub fn count_bordered_with_prefix(u: &Word, n: usize) -> Result<BigUint> {
    check_prefix(u, n)?;
    Ok(BorderCounter::new(u.alphabet(), n).count(u.symbols(), n))
}

/// The full DP row `B(u, i)` for `i = |u|..=n`.
pub fn border_count_table(u: &Word, n: usize) -> Result<BorderCountTable> {
    check_prefix(u, n)?;
    Ok(BorderCounter::new(u.alphabet(), n).table_for(u.symbols(), n))
}

fn check_prefix(u: &Word, n: usize) -> Result<()> {
    if u.len() > n {
        return Err(Error::PrefixTooLong {
            prefix: u.len(),
            length: n,
        });
    }
    Ok(())
}

/// `k^n`.
pub fn total_words(n: usize, k: u32) -> BigUint {
    BigUint::from(k).pow(n as u32)
}

pub fn count_bordered(n: usize, k: u32) -> Result<BigUint> {
    check_alphabet(k)?;
    check_length(n)?;
    let mut counter = BorderCounter::new(k, n);
    Ok((1..=k).map(|c| counter.count(&[c], n)).sum())
}

pub fn count_unbordered(n: usize, k: u32) -> Result<BigUint> {
    Ok(total_words(n, k) - count_bordered(n, k)?)
}

pub fn count_class(n: usize, k: u32, kind: WordClass) -> Result<BigUint> {
    match kind {
        WordClass::Bordered => count_bordered(n, k),
        WordClass::Unbordered => count_unbordered(n, k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{is_bordered, oracle};
    use proptest::prelude::*;

    fn word(symbols: &[Symbol], k: u32) -> Word {
        Word::new(symbols.to_vec(), k).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn prefix_count_examples() {
        assert_eq!(
            count_bordered_with_prefix(&word(&[1], 2), 1).unwrap(),
            big(0)
        );
        assert_eq!(
            count_bordered_with_prefix(&word(&[1], 2), 3).unwrap(),
            big(2)
        );
        assert_eq!(
            count_bordered_with_prefix(&word(&[1], 2), 2).unwrap(),
            big(1)
        );
        // 1211, 1212 and 1221; 1222 is the only unbordered completion.
        assert_eq!(
            count_bordered_with_prefix(&word(&[1, 2], 2), 4).unwrap(),
            big(3)
        );
        assert_eq!(
            count_bordered_with_prefix(&word(&[1, 2], 2), 4).unwrap(),
            oracle::count_bordered_with_prefix_naive(&word(&[1, 2], 2), 4).unwrap()
        );
    }

    #[test]
    fn prefix_longer_than_target_is_rejected() {
        assert_eq!(
            count_bordered_with_prefix(&word(&[1, 2, 1], 2), 2),
            Err(Error::PrefixTooLong {
                prefix: 3,
                length: 2
            })
        );
    }

    #[test]
    fn total_count_examples() {
        assert_eq!(count_bordered(1, 2).unwrap(), big(0));
        assert_eq!(count_bordered(3, 2).unwrap(), big(4));
        assert_eq!(count_bordered(4, 2).unwrap(), big(10));
        assert_eq!(count_unbordered(1, 2).unwrap(), big(2));
        assert_eq!(count_unbordered(4, 2).unwrap(), big(6));
        assert_eq!(count_unbordered(3, 3).unwrap(), big(18));
        assert_eq!(count_unbordered(8, 2).unwrap(), big(74));
    }

    #[test]
    fn total_count_errors() {
        assert_eq!(count_bordered(3, 1), Err(Error::AlphabetTooSmall(1)));
        assert_eq!(count_unbordered(3, 0), Err(Error::AlphabetTooSmall(0)));
        assert_eq!(count_bordered(0, 2), Err(Error::EmptyWord));
    }

    #[test]
    fn complement_and_exhaustive_small() {
        for (k, max_n) in [(2u32, 12usize), (3, 8), (4, 6)] {
            for n in 1..=max_n {
                let b = count_bordered(n, k).unwrap();
                let u = count_unbordered(n, k).unwrap();
                assert_eq!(&b + &u, total_words(n, k));
                assert_eq!(b, oracle::count_naive(n, k, WordClass::Bordered).unwrap());
            }
        }
    }

    #[test]
    fn large_counts_stay_exact() {
        // Every word of length n has k^n - B = U with U > 0, and the fraction
        // of unbordered words tends to a constant well inside (0, 1).
        let n = 300;
        let u = count_unbordered(n, 2).unwrap();
        let total = total_words(n, 2);
        assert!(u > BigUint::ZERO && u < total);
        assert!(u.bits() + 3 >= total.bits());
    }

    #[test]
    fn table_entries() {
        let u = word(&[1, 2, 1], 2);
        let table = border_count_table(&u, 9).unwrap();
        assert_eq!(table.base_length(), 3);
        assert_eq!(table.target_length(), 9);
        assert_eq!(table.get(3), Some(&big(1)));
        assert_eq!(table.get(2), None);
        assert_eq!(table.get(10), None);
        for len in 3..=9 {
            assert_eq!(
                table.get(len).unwrap(),
                &count_bordered_with_prefix(&u, len).unwrap()
            );
        }
    }

    fn arb_prefix() -> impl Strategy<Value = (Word, usize)> {
        (2u32..=4, 1usize..=9).prop_flat_map(|(k, n)| {
            (prop::collection::vec(1..=k, 1..=n), Just(n))
                .prop_map(move |(s, n)| (Word::new(s, k).unwrap(), n))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]

        #[test]
        fn matches_brute_force((u, n) in arb_prefix()) {
            prop_assert_eq!(
                count_bordered_with_prefix(&u, n).unwrap(),
                oracle::count_bordered_with_prefix_naive(&u, n).unwrap()
            );
        }

        #[test]
        fn prefix_decomposition((u, n) in arb_prefix()) {
            prop_assume!(u.len() < n);
            let k = u.alphabet();
            let split: BigUint = (1..=k)
                .map(|c| {
                    let mut s = u.symbols().to_vec();
                    s.push(c);
                    count_bordered_with_prefix(&Word::new(s, k).unwrap(), n).unwrap()
                })
                .sum();
            prop_assert_eq!(split, count_bordered_with_prefix(&u, n).unwrap());
        }

        #[test]
        fn table_invariants((u, n) in arb_prefix()) {
            let table = border_count_table(&u, n).unwrap();
            let p = u.len();
            let expected_base = if is_bordered(&u) { 1u32 } else { 0 };
            prop_assert_eq!(table.get(p).unwrap(), &BigUint::from(expected_base));
            for i in p..=n {
                prop_assert!(table.get(i).unwrap() <= &total_words(i - p, u.alphabet()));
            }
        }
    }
}
