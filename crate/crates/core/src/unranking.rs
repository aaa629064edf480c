//! Word at a given rank, and uniform sampling through random ranks.
//!
//! Unranking fixes one position at a time. Starting from `1^n`, position `i`
//! receives the largest symbol `x` for which the probe
//! `w_1 .. w_(i-1) x 1^(n-i)` still has rank at most `r`, found by binary
//! search over the alphabet. Because the rank functions count class members
//! strictly below their argument, the largest word of rank `<= r` is the
//! `r`-th class member.

use num_bigint::BigUint;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counting::BorderCounter;
use crate::ranking::class_rank;
use crate::word::{check_alphabet, check_length};
use crate::{count_class, Error, Result, Symbol, Word, WordClass};

/// The `rank`-th word (1-based) of the `kind` listing of length-`n` words
/// over `k` letters.
pub fn unrank(rank: &BigUint, n: usize, k: u32, kind: WordClass) -> Result<Word> {
    check_alphabet(k)?;
    check_length(n)?;
    let count = count_class(n, k, kind)?;
    if *rank == BigUint::ZERO || *rank > count {
        return Err(Error::RankOutOfRange {
            rank: rank.clone(),
            count,
        });
    }
    let mut counter = BorderCounter::new(k, n);
    Ok(unrank_validated(rank, n, kind, &mut counter))
}

fn unrank_validated(
    rank: &BigUint,
    n: usize,
    kind: WordClass,
    counter: &mut BorderCounter,
) -> Word {
    let k = counter.alphabet();
    let mut word: Vec<Symbol> = vec![1; n];
    let mut scratch = Vec::with_capacity(n);
    for i in 0..n {
        let (mut left, mut right) = (1, k);
        while left < right {
            let mid = (left + right).div_ceil(2);
            word[i] = mid;
            if class_rank(&word, kind, counter, &mut scratch) <= *rank {
                left = mid;
            } else {
                word[i] = left;
                right = mid - 1;
            }
        }
        word[i] = left;
    }
    Word::from_parts_unchecked(word, k)
}

/// Seeded uniform sampler over one class.
///
/// Draws ranks uniformly from `1..=count` with a ChaCha8 generator seeded by
/// `seed_from_u64`, then unranks them. A rank is drawn by sampling
/// `bits(count - 1)` random bits (big-endian bytes, top byte masked) and
/// rejecting values `>= count`, so every rank has exactly the same
/// probability. Successive draws share one generator, so a seed fixes the
/// whole sequence.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    length: usize,
    kind: WordClass,
    count: BigUint,
    alphabet: u32,
}

impl Sampler {
    pub fn new(n: usize, k: u32, kind: WordClass, seed: u64) -> Result<Self> {
        check_alphabet(k)?;
        check_length(n)?;
        let count = count_class(n, k, kind)?;
        if count == BigUint::ZERO {
            return Err(Error::EmptyClass {
                kind,
                length: n,
                alphabet: k,
            });
        }
        Ok(Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            length: n,
            kind,
            count,
            alphabet: k,
        })
    }

    /// Size of the class being sampled.
    pub fn count(&self) -> &BigUint {
        &self.count
    }

    pub fn next_rank(&mut self) -> BigUint {
        uniform_rank(&mut self.rng, &self.count)
    }

    pub fn next_word(&mut self) -> Word {
        let rank = self.next_rank();
        let mut counter = BorderCounter::new(self.alphabet, self.length);
        unrank_validated(&rank, self.length, self.kind, &mut counter)
    }
}

impl Iterator for Sampler {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        Some(self.next_word())
    }
}

/// One uniformly random word of the class, determined by `seed`.
pub fn sample_uniform(n: usize, k: u32, kind: WordClass, seed: u64) -> Result<Word> {
    Ok(Sampler::new(n, k, kind, seed)?.next_word())
}

/// Uniform value in `1..=count`; `count` must be positive.
fn uniform_rank<R: RngCore>(rng: &mut R, count: &BigUint) -> BigUint {
    let span = count - 1u32;
    let bits = span.bits() as usize;
    if bits == 0 {
        return BigUint::from(1u32);
    }
    let mut bytes = vec![0u8; bits.div_ceil(8)];
    let mask = 0xffu8 >> (bytes.len() * 8 - bits);
    loop {
        rng.fill_bytes(&mut bytes);
        bytes[0] &= mask;
        let candidate = BigUint::from_bytes_be(&bytes);
        if candidate <= span {
            return candidate + 1u32;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{is_bordered, oracle, rank};
    use proptest::prelude::*;

    fn word(symbols: &[Symbol], k: u32) -> Word {
        Word::new(symbols.to_vec(), k).unwrap()
    }

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn unrank_examples() {
        assert_eq!(
            unrank(&big(1), 3, 2, WordClass::Bordered).unwrap(),
            word(&[1, 1, 1], 2)
        );
        assert_eq!(
            unrank(&big(3), 3, 2, WordClass::Bordered).unwrap(),
            word(&[2, 1, 2], 2)
        );
        assert_eq!(
            unrank(&big(2), 3, 2, WordClass::Unbordered).unwrap(),
            word(&[1, 2, 2], 2)
        );
    }

    #[test]
    fn out_of_range_ranks() {
        assert_eq!(
            unrank(&big(5), 3, 2, WordClass::Bordered),
            Err(Error::RankOutOfRange {
                rank: big(5),
                count: big(4)
            })
        );
        assert!(matches!(
            unrank(&big(0), 3, 2, WordClass::Unbordered),
            Err(Error::RankOutOfRange { .. })
        ));
        // Past the last unbordered word the probe would drift to k^n.
        assert!(matches!(
            unrank(&big(5), 3, 2, WordClass::Unbordered),
            Err(Error::RankOutOfRange { .. })
        ));
        assert!(matches!(
            unrank(&big(1), 1, 2, WordClass::Bordered),
            Err(Error::RankOutOfRange { .. })
        ));
        assert_eq!(
            unrank(&big(1), 3, 1, WordClass::Bordered),
            Err(Error::AlphabetTooSmall(1))
        );
    }

    #[test]
    fn unrank_enumerates_listing() {
        for (n, k) in [(5usize, 2u32), (4, 3), (3, 5)] {
            for kind in [WordClass::Bordered, WordClass::Unbordered] {
                let listing = oracle::enumerate_class(n, k, kind).unwrap();
                for (i, expected) in listing.words().iter().enumerate() {
                    let got = unrank(&big(i as u64 + 1), n, k, kind).unwrap();
                    assert_eq!(&got, expected);
                }
            }
        }
    }

    #[test]
    fn sampling_errors_and_small_cases() {
        assert_eq!(
            sample_uniform(1, 2, WordClass::Bordered, 7),
            Err(Error::EmptyClass {
                kind: WordClass::Bordered,
                length: 1,
                alphabet: 2
            })
        );
        for seed in 0..20 {
            let w = sample_uniform(1, 3, WordClass::Unbordered, seed).unwrap();
            assert!((1..=3).contains(&w.symbols()[0]));
        }
    }

    #[test]
    fn sampling_is_reproducible_and_in_class() {
        let a = sample_uniform(8, 2, WordClass::Unbordered, 42).unwrap();
        let b = sample_uniform(8, 2, WordClass::Unbordered, 42).unwrap();
        assert_eq!(a, b);
        assert!(!is_bordered(&a));

        let first: Vec<Word> = Sampler::new(30, 3, WordClass::Bordered, 9)
            .unwrap()
            .take(10)
            .collect();
        let again: Vec<Word> = Sampler::new(30, 3, WordClass::Bordered, 9)
            .unwrap()
            .take(10)
            .collect();
        assert_eq!(first, again);
        assert!(first.iter().all(is_bordered));
    }

    #[test]
    fn uniform_rank_stays_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for count in [1u64, 2, 3, 5, 8, 255, 256, 257, 1000] {
            let count = big(count);
            for _ in 0..200 {
                let r = uniform_rank(&mut rng, &count);
                assert!(r >= big(1) && r <= count);
            }
        }
        // every value is reachable
        let mut seen = [false; 7];
        for _ in 0..500 {
            let r = uniform_rank(&mut rng, &big(7));
            seen[usize::try_from(r).unwrap() - 1] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn round_trip_from_words(
            (k, symbols) in (2u32..=4).prop_flat_map(|k| (Just(k), prop::collection::vec(1..=k, 1..30)))
        ) {
            let w = Word::new(symbols, k).unwrap();
            let kind = if is_bordered(&w) { WordClass::Bordered } else { WordClass::Unbordered };
            let r = rank(&w, kind);
            prop_assert_eq!(unrank(r.value(), w.len(), k, kind).unwrap(), w);
        }

        #[test]
        fn round_trip_from_ranks(seed in any::<u64>(), n in 1usize..25, k in 2u32..=4, bordered in any::<bool>()) {
            let kind = if bordered { WordClass::Bordered } else { WordClass::Unbordered };
            prop_assume!(!(bordered && n == 1));
            let mut sampler = Sampler::new(n, k, kind, seed).unwrap();
            let r = sampler.next_rank();
            let w = unrank(&r, n, k, kind).unwrap();
            prop_assert_eq!(kind.contains(is_bordered(&w)), true);
            prop_assert_eq!(rank(&w, kind).into_value(), r);
        }
    }
}
