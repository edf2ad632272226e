use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::resources::Stopwords;
use crate::text::{Document, Token};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TfidfConfig {
    pub min_df: usize,
    pub max_features: Option<usize>,
    pub max_n: usize,
}

impl Default for TfidfConfig {
    fn default() -> Self {
        TfidfConfig {
            min_df: 1,
            max_features: None,
            max_n: 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TfidfModel {
    /// N-gram (space-joined) to column index; columns follow key order.
    pub vocabulary: BTreeMap<String, usize>,
    pub idf: Vec<f64>,
    pub config: TfidfConfig,
    pub stopwords_id: String,
    pub n_docs: usize,
}

impl TfidfModel {
    pub fn len(&self) -> usize {
        self.idf.len()
    }

    pub fn is_empty(&self) -> bool {
        self.idf.is_empty()
    }

    pub fn column(&self, ngram: &str) -> Option<usize> {
        self.vocabulary.get(ngram).copied()
    }

    /// Column terms in index order.
    pub fn terms(&self) -> Vec<&str> {
        let mut terms = alloc::vec![""; self.vocabulary.len()];
        for (t, &i) in &self.vocabulary {
            terms[i] = t;
        }
        terms
    }
}

/// Space-joined n-grams (1..=max_n) over lowercased, stopword-filtered word tokens.
pub fn ngrams(tokens: &[Token], stopwords: &Stopwords, max_n: usize) -> Vec<String> {
    let words: Vec<&str> = tokens
        .iter()
        .filter(|t| t.is_word && !stopwords.contains(&t.lower))
        .map(|t| t.lower.as_str())
        .collect();
    let mut out = Vec::new();
    for n in 1..=max_n {
        for w in words.windows(n) {
            out.push(w.join(" "));
        }
    }
    out
}

pub fn tfidf_fit(corpus: &[Document], config: &TfidfConfig, stopwords: &Stopwords) -> Result<TfidfModel> {
    if corpus.is_empty() {
        return Err(Error::EmptyInput("tfidf corpus"));
    }
    if config.max_n == 0 {
        return Err(Error::InvalidConfig("tfidf max_n must be at least 1".into()));
    }
    let mut df: BTreeMap<String, usize> = BTreeMap::new();
    for doc in corpus {
        let mut grams = ngrams(doc.tokens(), stopwords, config.max_n);
        grams.sort_unstable();
        grams.dedup();
        for g in grams {
            *df.entry(g).or_default() += 1;
        }
    }
    let mut kept: Vec<(String, usize)> = df.into_iter().filter(|(_, d)| *d >= config.min_df).collect();
    if let Some(max) = config.max_features {
        // stable sort keeps lexicographic order among equal document frequencies
        kept.sort_by_key(|k| core::cmp::Reverse(k.1));
        kept.truncate(max);
        kept.sort_by(|a, b| a.0.cmp(&b.0));
    }
    let n = corpus.len() as f64;
    let idf = kept.iter().map(|(_, d)| libm::log((1.0 + n) / (1.0 + *d as f64)) + 1.0).collect();
    let vocabulary = kept.into_iter().enumerate().map(|(i, (t, _))| (t, i)).collect();
    Ok(TfidfModel {
        vocabulary,
        idf,
        config: config.clone(),
        stopwords_id: stopwords.id.clone(),
        n_docs: corpus.len(),
    })
}

/// Sparse `(column, weight)` pairs sorted by column, L2-normalized.
pub fn tfidf_transform(model: &TfidfModel, tokens: &[Token], stopwords: &Stopwords) -> Vec<(usize, f64)> {
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for g in ngrams(tokens, stopwords, model.config.max_n) {
        if let Some(col) = model.column(&g) {
            *counts.entry(col).or_default() += 1;
        }
    }
    let mut weights: Vec<(usize, f64)> = counts
        .into_iter()
        .map(|(c, k)| (c, k as f64 * model.idf[c]))
        .collect();
    let norm = libm::sqrt(weights.iter().map(|(_, w)| w * w).sum::<f64>());
    if norm > 0.0 {
        for (_, w) in &mut weights {
            *w /= norm;
        }
    }
    weights
}
