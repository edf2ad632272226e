use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::text::normalize_token;
use crate::{Error, Result};

/// Lowercased phrases of one to `max_n` whitespace-separated words.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhraseSet {
    phrases: BTreeSet<Vec<String>>,
    max_n: usize,
}

impl PhraseSet {
    pub fn len(&self) -> usize {
        self.phrases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phrases.is_empty()
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    pub fn contains<S: AsRef<str>>(&self, words: &[S]) -> bool {
        // BTreeSet<Vec<String>> lookups need an owned key
        let key: Vec<String> = words.iter().map(|w| String::from(w.as_ref())).collect();
        self.phrases.contains(&key)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Vec<String>> {
        self.phrases.iter()
    }
}

/// One phrase per line; blank lines and `#` comments are skipped.
pub fn load_phrase_list(input: &str, max_n: usize) -> Result<PhraseSet> {
    let mut phrases = BTreeSet::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let words: Vec<String> = line.split_whitespace().map(normalize_token).collect();
        if words.len() > max_n {
            return Err(Error::Parse {
                line: i + 1,
                message: alloc::format!("phrase has {} words, limit is {max_n}", words.len()),
            });
        }
        phrases.insert(words);
    }
    Ok(PhraseSet { phrases, max_n })
}
