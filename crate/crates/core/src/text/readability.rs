use super::{count_syllables, Document, SentenceSpan, Token};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReadabilityCounts {
    pub words: usize,
    pub sentences: usize,
    pub syllables: usize,
}

pub fn readability_counts(tokens: &[Token], sentences: &[SentenceSpan]) -> ReadabilityCounts {
    let mut words = 0;
    let mut syllables = 0;
    for t in tokens.iter().filter(|t| t.is_word) {
        words += 1;
        // word tokens always contain a letter
        syllables += count_syllables(&t.surface).unwrap_or(1);
    }
    ReadabilityCounts {
        words,
        sentences: sentences.len(),
        syllables,
    }
}

/// Flesch reading ease: `206.835 - 1.015 * words/sentences - 84.6 * syllables/words`,
/// counted over word tokens only. Unbounded in both directions.
pub fn flesch_reading_ease(doc: &Document) -> Result<f64> {
    let c = readability_counts(doc.tokens(), doc.sentences());
    if c.words == 0 || c.sentences == 0 {
        return Err(Error::DegenerateDocument("no words or no sentences"));
    }
    let words = c.words as f64;
    Ok(206.835 - 1.015 * (words / c.sentences as f64) - 84.6 * (c.syllables as f64 / words))
}
