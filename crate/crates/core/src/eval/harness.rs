use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::rouge::{rouge_lcs, rouge_n, rouge_tokens};
use crate::ranker::{rank_by_aspects, AspectScores, Method};
use crate::stats::{mean, paired_t_test};
use crate::{Error, Result};

/// The 1-3 sentences of an article that annotators marked for rewriting.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldAnnotation {
    pub article_id: String,
    pub gold_sentence_indices: Vec<usize>,
}

impl GoldAnnotation {
    pub fn validate(&self, sentence_count: usize) -> Result<()> {
        let n = self.gold_sentence_indices.len();
        if !(1..=3).contains(&n) {
            return Err(Error::InvalidConfig(alloc::format!(
                "article {}: GOLD must list 1 to 3 sentences, got {n}",
                self.article_id
            )));
        }
        if let Some(i) = self.gold_sentence_indices.iter().find(|&&i| i >= sentence_count) {
            return Err(Error::InvalidConfig(alloc::format!(
                "article {}: GOLD index {i} out of range for {sentence_count} sentences",
                self.article_id
            )));
        }
        Ok(())
    }
}

/// Share of the top `k` selections found in GOLD; the denominator is always `k`.
pub fn precision_at_k(selected: &[usize], gold: &GoldAnnotation, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    if selected.is_empty() {
        return Err(Error::EmptyInput("no selected sentences"));
    }
    let hits = selected
        .iter()
        .take(k)
        .filter(|i| gold.gold_sentence_indices.contains(i))
        .count();
    Ok(hits as f64 / k as f64)
}

/// One method's selection for one article, with the article's sentences.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArticleRanking {
    pub article_id: String,
    pub method: Method,
    pub indices: Vec<usize>,
    pub sentences: Vec<String>,
}

/// An article with precomputed sentence aspects.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ArticleCase {
    pub id: String,
    pub sentences: Vec<String>,
    pub aspects: Vec<AspectScores>,
}

pub const METRIC_NAMES: [&str; 6] = ["rouge1", "rouge2", "rougeL", "prec@1", "prec@2", "prec@3"];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricRow {
    pub method: Method,
    pub articles: usize,
    /// Means over articles, in `METRIC_NAMES` order.
    pub metrics: [f64; 6],
    /// Two-sided paired t-test p-values against the reference method, by metric name.
    pub p_values: BTreeMap<String, f64>,
}

impl MetricRow {
    pub fn metric(&self, name: &str) -> Option<f64> {
        METRIC_NAMES.iter().position(|n| *n == name).map(|i| self.metrics[i])
    }
}

fn joined(sentences: &[String], indices: &[usize]) -> Vec<String> {
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    idx.dedup();
    idx.iter().flat_map(|&i| rouge_tokens(&sentences[i])).collect()
}

fn article_metrics(r: &ArticleRanking, gold: &GoldAnnotation) -> Result<[f64; 6]> {
    gold.validate(r.sentences.len())?;
    if let Some(i) = r.indices.iter().find(|&&i| i >= r.sentences.len()) {
        return Err(Error::InvalidConfig(alloc::format!(
            "article {}: ranked index {i} out of range",
            r.article_id
        )));
    }
    let cand = joined(&r.sentences, &r.indices);
    let refr = joined(&r.sentences, &gold.gold_sentence_indices);
    Ok([
        rouge_n(&cand, &refr, 1).f1,
        rouge_n(&cand, &refr, 2).f1,
        rouge_lcs(&cand, &refr).f1,
        precision_at_k(&r.indices, gold, 1)?,
        precision_at_k(&r.indices, gold, 2)?,
        precision_at_k(&r.indices, gold, 3)?,
    ])
}

/// Averages per-article metrics for each method and tests every method
/// against `reference` with paired t-tests over shared articles.
pub fn evaluate_rankings(
    rankings: &[ArticleRanking],
    golds: &[GoldAnnotation],
    reference: Method,
) -> Result<Vec<MetricRow>> {
    let gold_by_id: BTreeMap<&str, &GoldAnnotation> = golds.iter().map(|g| (g.article_id.as_str(), g)).collect();
    let missing: BTreeSet<String> = rankings
        .iter()
        .filter(|r| !gold_by_id.contains_key(r.article_id.as_str()))
        .map(|r| r.article_id.clone())
        .collect();
    if !missing.is_empty() {
        return Err(Error::MissingGold(missing.into_iter().collect()));
    }
    let mut per_method: BTreeMap<Method, BTreeMap<&str, [f64; 6]>> = BTreeMap::new();
    for r in rankings {
        let m = article_metrics(r, gold_by_id[r.article_id.as_str()])?;
        per_method.entry(r.method).or_default().insert(r.article_id.as_str(), m);
    }
    let reference_scores = per_method.get(&reference);
    let mut rows = Vec::new();
    for (method, scores) in &per_method {
        let mut metrics = [0.0; 6];
        for (i, m) in metrics.iter_mut().enumerate() {
            let column: Vec<f64> = scores.values().map(|s| s[i]).collect();
            *m = mean(&column);
        }
        let mut p_values = BTreeMap::new();
        if let Some(refs) = reference_scores.filter(|_| *method != reference) {
            let shared: Vec<&str> = scores.keys().filter(|k| refs.contains_key(*k)).copied().collect();
            if shared.len() >= 2 {
                for (i, name) in METRIC_NAMES.iter().enumerate() {
                    let a: Vec<f64> = shared.iter().map(|k| scores[k][i]).collect();
                    let b: Vec<f64> = shared.iter().map(|k| refs[k][i]).collect();
                    p_values.insert(String::from(*name), paired_t_test(&a, &b)?.p);
                }
            }
        }
        rows.push(MetricRow {
            method: *method,
            articles: scores.len(),
            metrics,
            p_values,
        });
    }
    Ok(rows)
}

/// Ranks every case with every method and evaluates against GOLD, using
/// MASR-3 as the significance reference. RAND-3 uses `seed + article position`.
pub fn evaluate_rankers(
    cases: &[ArticleCase],
    golds: &[GoldAnnotation],
    methods: &[Method],
    seed: u64,
    k: usize,
) -> Result<Vec<MetricRow>> {
    let mut rankings = Vec::with_capacity(cases.len() * methods.len());
    for (pos, case) in cases.iter().enumerate() {
        if case.sentences.len() != case.aspects.len() {
            return Err(Error::LengthMismatch(case.sentences.len(), case.aspects.len()));
        }
        for &method in methods {
            let indices = rank_by_aspects(method, &case.aspects, k, Some(seed.wrapping_add(pos as u64)))?;
            rankings.push(ArticleRanking {
                article_id: case.id.clone(),
                method,
                indices,
                sentences: case.sentences.clone(),
            });
        }
    }
    evaluate_rankings(&rankings, golds, Method::Masr3)
}
