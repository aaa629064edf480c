//! Textual word encoding used by the command-line tool.
//!
//! For `k <= 9` a word is a string of digits (`212`). For larger alphabets
//! it is a comma-separated list of decimal symbols (`2,1,12`). Symbols are
//! 1-based in both forms.

use thiserror::Error;

use crate::{Error, Symbol, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("word text is empty")]
    Empty,
    #[error("`{0}` is not a symbol")]
    NotASymbol(String),
    #[error(transparent)]
    Invalid(#[from] Error),
}

pub fn parse_word(text: &str, alphabet: u32) -> Result<Word, ParseWordError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(ParseWordError::Empty);
    }
    let symbols: Vec<Symbol> = if alphabet <= 9 && !text.contains(',') {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .ok_or_else(|| ParseWordError::NotASymbol(c.to_string()))
            })
            .collect::<Result<_, _>>()?
    } else {
        text.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<Symbol>()
                    .map_err(|_| ParseWordError::NotASymbol(part.to_string()))
            })
            .collect::<Result<_, _>>()?
    };
    Ok(Word::new(symbols, alphabet)?)
}

pub fn render_word(w: &Word) -> String {
    let symbols = w.symbols().iter().map(|s| s.to_string());
    if w.alphabet() <= 9 {
        symbols.collect()
    } else {
        symbols.collect::<Vec<_>>().join(",")
    }
}
