use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::text::{tokenize, Document, Token};
use crate::{Error, Result};

/// Counts of the four ways a text refers back to its own organization.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCounts {
    pub repetition: usize,
    pub partial_repetition: usize,
    pub coreference: usize,
    pub possessive_inferrable: usize,
}

impl ChainCounts {
    pub fn as_array(&self) -> [usize; 4] {
        [
            self.repetition,
            self.partial_repetition,
            self.coreference,
            self.possessive_inferrable,
        ]
    }
}

impl core::ops::Add for ChainCounts {
    type Output = ChainCounts;

    fn add(self, o: ChainCounts) -> ChainCounts {
        ChainCounts {
            repetition: self.repetition + o.repetition,
            partial_repetition: self.partial_repetition + o.partial_repetition,
            coreference: self.coreference + o.coreference,
            possessive_inferrable: self.possessive_inferrable + o.possessive_inferrable,
        }
    }
}

pub(crate) const FIRST_PERSON_PLURAL: [&str; 5] = ["we", "us", "our", "ours", "ourselves"];

fn match_key(t: &Token) -> &str {
    t.lower.strip_suffix("'s").unwrap_or(&t.lower)
}

/// Lowercased word sequences of each alias, longest first.
pub(crate) fn alias_sequences(aliases: &[String]) -> Result<Vec<Vec<String>>> {
    let mut seqs: Vec<Vec<String>> = aliases
        .iter()
        .map(|a| tokenize(a).into_iter().filter(|t| t.is_word).map(|t| t.lower).collect::<Vec<_>>())
        .filter(|s| !s.is_empty())
        .collect();
    if seqs.is_empty() {
        return Err(Error::EmptyInput("company aliases"));
    }
    seqs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    seqs.dedup();
    Ok(seqs)
}

/// Alias occurrences in one sentence as `(start, len)` token ranges, matched
/// greedily left to right, longest alias first.
pub(crate) fn alias_matches(tokens: &[Token], aliases: &[Vec<String>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut i = 0;
    while i < tokens.len() {
        let hit = aliases.iter().find(|a| {
            i + a.len() <= tokens.len()
                && a.iter().zip(&tokens[i..i + a.len()]).all(|(w, t)| t.is_word && match_key(t) == w)
        });
        match hit {
            Some(a) => {
                out.push((i, a.len()));
                i += a.len();
            }
            None => i += 1,
        }
    }
    out
}

fn sentence_counts(tokens: &[Token], aliases: &[Vec<String>]) -> ChainCounts {
    let mut c = ChainCounts::default();
    let matches = alias_matches(tokens, aliases);
    c.repetition = matches.len();

    let mut i = 0;
    while i < tokens.len() {
        if !(tokens[i].is_word && tokens[i].starts_uppercase()) {
            i += 1;
            continue;
        }
        let start = i;
        while i < tokens.len() && tokens[i].is_word && tokens[i].starts_uppercase() {
            i += 1;
        }
        let run = i - start;
        let extends = matches
            .iter()
            .any(|&(m, len)| m >= start && m + len <= i && run > len);
        if extends {
            c.partial_repetition += 1;
        }
    }

    for (k, t) in tokens.iter().enumerate() {
        if FIRST_PERSON_PLURAL.contains(&t.lower.as_str()) {
            c.coreference += 1;
        }
        if (t.lower == "our" || t.lower == "your")
            && tokens.get(k + 1).is_some_and(|n| n.is_word && !n.starts_uppercase())
        {
            c.possessive_inferrable += 1;
        }
    }
    c
}

pub fn chains_of_reference(doc: &Document, aliases: &[String]) -> Result<ChainCounts> {
    Ok(counts_with(doc, &alias_sequences(aliases)?))
}

/// Counts for a document whose company is unknown: no alias can match, so
/// only the pronoun relations are counted.
pub(crate) fn chains_without_aliases(doc: &Document) -> ChainCounts {
    counts_with(doc, &[])
}

fn counts_with(doc: &Document, seqs: &[Vec<String>]) -> ChainCounts {
    (0..doc.sentences().len())
        .map(|s| sentence_counts(doc.sentence_tokens(s), seqs))
        .fold(ChainCounts::default(), |a, b| a + b)
}
