use alloc::vec::Vec;

use crate::lexicon::PhraseSet;
use crate::text::Token;
use crate::{Error, Result};

fn word_lowers(tokens: &[Token]) -> Vec<&str> {
    tokens.iter().filter(|t| t.is_word).map(|t| t.lower.as_str()).collect()
}

/// Contractions per 100 word tokens.
pub fn contraction_rate(tokens: &[Token], contractions: &PhraseSet) -> Result<f64> {
    let words = word_lowers(tokens);
    if words.is_empty() {
        return Err(Error::EmptyInput("no word tokens"));
    }
    let hits = words.iter().filter(|w| contractions.contains(&[**w])).count();
    Ok(100.0 * hits as f64 / words.len() as f64)
}

/// Collocations per 100 word tokens, matched greedily left to right, longest first,
/// without overlap.
pub fn collocation_rate(tokens: &[Token], collocations: &PhraseSet) -> Result<f64> {
    let words = word_lowers(tokens);
    if words.is_empty() {
        return Err(Error::EmptyInput("no word tokens"));
    }
    let max_n = collocations.max_n().min(words.len());
    let mut hits = 0usize;
    let mut i = 0;
    while i < words.len() {
        let longest = (1..=max_n.min(words.len() - i))
            .rev()
            .find(|&n| collocations.contains(&words[i..i + n]));
        match longest {
            Some(n) => {
                hits += 1;
                i += n;
            }
            None => i += 1,
        }
    }
    Ok(100.0 * hits as f64 / words.len() as f64)
}
