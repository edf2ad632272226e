use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::text::tokenize;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct RougeScore {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl RougeScore {
    fn from_overlap(overlap: usize, cand: usize, reference: usize) -> Self {
        if overlap == 0 || cand == 0 || reference == 0 {
            return RougeScore::default();
        }
        let precision = overlap as f64 / cand as f64;
        let recall = overlap as f64 / reference as f64;
        RougeScore {
            precision,
            recall,
            f1: 2.0 * precision * recall / (precision + recall),
        }
    }
}

/// Lowercased alphanumeric tokens; punctuation is dropped, no stemming.
pub fn rouge_tokens(text: &str) -> Vec<String> {
    tokenize(text)
        .into_iter()
        .filter(|t| t.surface.chars().any(char::is_alphanumeric))
        .map(|t| t.lower)
        .collect()
}

fn ngram_counts<S: AsRef<str>>(tokens: &[S], n: usize) -> BTreeMap<Vec<&str>, usize> {
    let mut out = BTreeMap::new();
    if n == 0 || tokens.len() < n {
        return out;
    }
    for w in tokens.windows(n) {
        *out.entry(w.iter().map(AsRef::as_ref).collect()).or_default() += 1;
    }
    out
}

pub fn rouge_n<S: AsRef<str>>(candidate: &[S], reference: &[S], n: usize) -> RougeScore {
    let c = ngram_counts(candidate, n);
    let r = ngram_counts(reference, n);
    let overlap = c.iter().map(|(g, k)| (*k).min(r.get(g).copied().unwrap_or(0))).sum();
    RougeScore::from_overlap(overlap, c.values().sum(), r.values().sum())
}

pub fn rouge_lcs<S: AsRef<str>>(candidate: &[S], reference: &[S]) -> RougeScore {
    let m = reference.len();
    let mut prev = alloc::vec![0usize; m + 1];
    let mut cur = alloc::vec![0usize; m + 1];
    for c in candidate {
        for j in 1..=m {
            cur[j] = if c.as_ref() == reference[j - 1].as_ref() {
                prev[j - 1] + 1
            } else {
                prev[j].max(cur[j - 1])
            };
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    RougeScore::from_overlap(prev[m], candidate.len(), m)
}
