//! Ranking, unranking, counting and uniform sampling of bordered and
//! unbordered words.
//!
//! A *border* of a word is a non-empty proper prefix that is also a suffix.
//! Words are sequences over the alphabet `{1, ..., k}` ordered
//! lexicographically, and every rank is 1-based. All counts and ranks are
//! exact [`BigUint`](num_bigint::BigUint) values since they grow like `k^n`.
//!
//! ```
//! use bordered::{rank_bordered, unrank, Word, WordClass};
//!
//! let w = Word::new(vec![2, 1, 2], 2).unwrap();
//! let r = rank_bordered(&w);
//! assert_eq!(r.value(), &3u32.into());
//! assert_eq!(unrank(r.value(), 3, 2, WordClass::Bordered).unwrap(), w);
//! ```

pub mod border;
pub mod cli;
pub mod counting;
mod error;
pub mod oracle;
pub mod ranking;
pub mod text;
pub mod unranking;
mod word;

pub use border::{
    border_indicator, compute_lps, is_bordered, shortest_border, unbordered_prefix_indicator,
    IndicatorArray, IndicatorRole, PrefixBorderArray,
};
pub use counting::{
    border_count_table, count_bordered, count_bordered_with_prefix, count_class, count_unbordered,
    total_words, BorderCountTable,
};
pub use error::{Error, Result};
pub use ranking::{rank, rank_bordered, rank_unbordered, Rank};
pub use unranking::{sample_uniform, unrank, Sampler};
pub use word::{Symbol, Word, WordClass};
