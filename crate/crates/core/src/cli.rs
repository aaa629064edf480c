//! Command-line front end.
//!
//! Results go to stdout, one item per line. Diagnostics go to stderr.
//! Exit status is 0 on success, 1 for usage or parse errors, and 2 for
//! domain errors such as an out-of-range rank.

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;

use crate::text::{parse_word, render_word, ParseWordError};
use crate::{
    border_indicator, compute_lps, count_class, oracle, rank, unbordered_prefix_indicator, unrank,
    Error, Sampler, Word, WordClass,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "bordered",
    version,
    about = "Rank, unrank, count and sample bordered and unbordered words"
)]
struct Cli {
    /// Use brute-force enumeration for rank, unrank and count (small instances only).
    #[arg(long, global = true)]
    oracle: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Kind {
    Bordered,
    Unbordered,
}

impl From<Kind> for WordClass {
    fn from(kind: Kind) -> Self {
        match kind {
            Kind::Bordered => WordClass::Bordered,
            Kind::Unbordered => WordClass::Unbordered,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the 1-based rank of WORD in the chosen listing.
    Rank {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'k', long = "alphabet")]
        alphabet: u32,
        word: String,
    },
    /// Print the word at rank R.
    Unrank {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'k', long = "alphabet")]
        alphabet: u32,
        #[arg(short = 'n', long = "length")]
        length: usize,
        #[arg(short = 'r', long = "rank")]
        rank: BigUint,
    },
    /// Print the number of words in the chosen class.
    Count {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'k', long = "alphabet")]
        alphabet: u32,
        #[arg(short = 'n', long = "length")]
        length: usize,
    },
    /// Print uniformly random class members, one per line.
    ///
    /// All draws share one generator seeded with --seed.
    Sample {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(short = 'k', long = "alphabet")]
        alphabet: u32,
        #[arg(short = 'n', long = "length")]
        length: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
    /// Print the failure function, unbordered prefix indicator and border
    /// indicator of WORD, one per line.
    Analyze {
        #[arg(short = 'k', long = "alphabet")]
        alphabet: u32,
        word: String,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<ParseWordError> for Failure {
    fn from(e: ParseWordError) -> Self {
        match e {
            ParseWordError::Invalid(e @ Error::AlphabetTooSmall(_)) => Failure::Domain(e),
            other => Failure::Usage(format!("invalid word: {other}")),
        }
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn check_length(length: usize) -> Result<(), Failure> {
    if length == 0 {
        Err(Failure::Usage("length must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn execute(cli: Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Usage(format!("cannot write output: {e}"));
    match cli.command {
        Command::Rank {
            kind,
            alphabet,
            word,
        } => {
            let word = parse_word(&word, alphabet)?;
            let value = if cli.oracle {
                oracle::rank_naive(&word, kind.into())?
            } else {
                rank(&word, kind.into())
            };
            writeln!(out, "{value}").map_err(io)?;
        }
        Command::Unrank {
            kind,
            alphabet,
            length,
            rank,
        } => {
            check_length(length)?;
            let word = if cli.oracle {
                let listing = oracle::enumerate_class(length, alphabet, kind.into())?;
                let count = listing.words().len();
                usize::try_from(&rank)
                    .ok()
                    .and_then(|r| listing.get(r))
                    .cloned()
                    .ok_or(Error::RankOutOfRange {
                        rank,
                        count: count.into(),
                    })?
            } else {
                unrank(&rank, length, alphabet, kind.into())?
            };
            writeln!(out, "{}", render_word(&word)).map_err(io)?;
        }
        Command::Count {
            kind,
            alphabet,
            length,
        } => {
            check_length(length)?;
            let count = if cli.oracle {
                oracle::count_naive(length, alphabet, kind.into())?
            } else {
                count_class(length, alphabet, kind.into())?
            };
            writeln!(out, "{count}").map_err(io)?;
        }
        Command::Sample {
            kind,
            alphabet,
            length,
            seed,
            count,
        } => {
            check_length(length)?;
            let sampler = Sampler::new(length, alphabet, kind.into(), seed)?;
            for word in sampler.take(count) {
                writeln!(out, "{}", render_word(&word)).map_err(io)?;
            }
        }
        Command::Analyze { alphabet, word } => {
            let word: Word = parse_word(&word, alphabet)?;
            let lps = compute_lps(&word);
            writeln!(out, "{}", join(lps.as_slice())).map_err(io)?;
            writeln!(
                out,
                "{}",
                join(unbordered_prefix_indicator(&word).to_digits())
            )
            .map_err(io)?;
            writeln!(out, "{}", join(border_indicator(&word).to_digits())).map_err(io)?;
        }
    }
    Ok(())
}

/// Runs the tool on `args` (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{e}");
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(cli, out) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.name());
            EXIT_DOMAIN
        }
    }
}
