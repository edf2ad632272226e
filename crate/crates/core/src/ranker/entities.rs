use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::features::{alias_matches, FIRST_PERSON_PLURAL};
use crate::resources::Stopwords;
use crate::text::{tokenize, Document, Token};

/// Curated phrases that stand for the target organization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralEntitySet {
    entities: BTreeSet<String>,
    company_aliases: Vec<String>,
    resolve_pronouns: bool,
    #[serde(skip)]
    sequences: Vec<Vec<String>>,
}

fn phrase_words(phrase: &str) -> Vec<String> {
    tokenize(phrase).into_iter().filter(|t| t.is_word).map(|t| t.lower).collect()
}

impl CentralEntitySet {
    pub fn new<E, A>(entities: E, company_aliases: A, resolve_pronouns: bool) -> Self
    where
        E: IntoIterator,
        E::Item: AsRef<str>,
        A: IntoIterator,
        A::Item: Into<String>,
    {
        let entities: BTreeSet<String> = entities
            .into_iter()
            .map(|e| phrase_words(e.as_ref()).join(" "))
            .filter(|e| !e.is_empty())
            .collect();
        let company_aliases: Vec<String> = company_aliases.into_iter().map(Into::into).collect();
        let mut set = CentralEntitySet {
            entities,
            company_aliases,
            resolve_pronouns,
            sequences: Vec::new(),
        };
        set.build_sequences();
        set
    }

    fn build_sequences(&mut self) {
        let mut seqs: Vec<Vec<String>> = self
            .entities
            .iter()
            .map(|e| phrase_words(e))
            .chain(self.company_aliases.iter().map(|a| phrase_words(a)))
            .filter(|s| !s.is_empty())
            .collect();
        seqs.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        seqs.dedup();
        self.sequences = seqs;
    }

    /// Restores matching state after deserialization.
    pub fn rehydrate(mut self) -> Self {
        self.build_sequences();
        self
    }

    pub fn entities(&self) -> &BTreeSet<String> {
        &self.entities
    }

    pub fn company_aliases(&self) -> &[String] {
        &self.company_aliases
    }

    pub fn resolve_pronouns(&self) -> bool {
        self.resolve_pronouns
    }

    pub fn is_empty(&self) -> bool {
        self.sequences.is_empty()
    }

    /// Entity and alias mentions, plus first-person-plural pronouns when
    /// pronoun resolution is on.
    pub fn mentions(&self, tokens: &[Token]) -> usize {
        let mut n = alias_matches(tokens, &self.sequences).len();
        if self.resolve_pronouns {
            n += tokens
                .iter()
                .filter(|t| FIRST_PERSON_PLURAL.contains(&t.lower.as_str()))
                .count();
        }
        n
    }
}

/// Candidate central entities: maximal runs of capitalized words (minus a
/// sentence-initial stopword), lowercased, seen at least `min_freq` times.
/// Sorted by frequency, most frequent first.
pub fn detect_entities(doc: &Document, min_freq: usize, stopwords: &Stopwords) -> Vec<(String, usize)> {
    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for s in 0..doc.sentences().len() {
        let tokens = doc.sentence_tokens(s);
        let mut i = 0;
        while i < tokens.len() {
            if !(tokens[i].is_word && tokens[i].starts_uppercase()) {
                i += 1;
                continue;
            }
            let mut start = i;
            while i < tokens.len() && tokens[i].is_word && tokens[i].starts_uppercase() {
                i += 1;
            }
            if start == 0 && stopwords.contains(&tokens[0].lower) {
                start += 1;
            }
            if start < i {
                let phrase: Vec<&str> = tokens[start..i].iter().map(|t| t.lower.as_str()).collect();
                *counts.entry(phrase.join(" ")).or_default() += 1;
            }
        }
    }
    let mut out: Vec<(String, usize)> = counts.into_iter().filter(|(_, c)| *c >= min_freq).collect();
    out.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));
    out
}
