use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::aspects::{article_aspects, relevance_score, AspectScores, RankContext};
use crate::text::Document;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Masr3,
    Rand3,
    Lead3,
    Ctr3,
    Pol3,
    Cons3,
    ConsPol3,
}

impl Method {
    pub const ALL: [Method; 7] = [
        Method::Masr3,
        Method::Rand3,
        Method::Lead3,
        Method::Ctr3,
        Method::Pol3,
        Method::Cons3,
        Method::ConsPol3,
    ];

    /// Short identifier used in files and flags, e.g. `masr3`.
    pub fn id(self) -> &'static str {
        match self {
            Method::Masr3 => "masr3",
            Method::Rand3 => "rand3",
            Method::Lead3 => "lead3",
            Method::Ctr3 => "ctr3",
            Method::Pol3 => "pol3",
            Method::Cons3 => "cons3",
            Method::ConsPol3 => "conspol3",
        }
    }

    /// Display label, e.g. `MASR-3`.
    pub fn label(self) -> &'static str {
        match self {
            Method::Masr3 => "MASR-3",
            Method::Rand3 => "RAND-3",
            Method::Lead3 => "LEAD-3",
            Method::Ctr3 => "CTR-3",
            Method::Pol3 => "POL-3",
            Method::Cons3 => "CONS-3",
            Method::ConsPol3 => "CONS-POL-3",
        }
    }

    /// Accepts ids and labels case-insensitively, ignoring `-` and `_`.
    pub fn parse(s: &str) -> Result<Method> {
        let key: String = s
            .chars()
            .filter(|c| *c != '-' && *c != '_')
            .flat_map(char::to_lowercase)
            .collect();
        Method::ALL
            .into_iter()
            .find(|m| m.id() == key)
            .ok_or_else(|| Error::UnknownMethod(s.into()))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankedSentence {
    pub index: usize,
    pub text: String,
    pub relevance: u8,
    pub aspects: AspectScores,
}

fn desc_f64(a: f64, b: f64) -> Ordering {
    b.total_cmp(&a)
}

/// Indices matching `keep`, ordered by `cmp` then index, followed by the
/// remaining indices in document order.
fn filtered_then_padded(
    aspects: &[AspectScores],
    keep: impl Fn(&AspectScores) -> bool,
    cmp: impl Fn(&AspectScores, &AspectScores) -> Ordering,
) -> Vec<usize> {
    let mut hit: Vec<usize> = (0..aspects.len()).filter(|&i| keep(&aspects[i])).collect();
    hit.sort_by(|&a, &b| cmp(&aspects[a], &aspects[b]).then(a.cmp(&b)));
    hit.extend((0..aspects.len()).filter(|&i| !keep(&aspects[i])));
    hit
}

/// Full ordering of sentence indices under `method`, truncated to `k`.
pub fn rank_by_aspects(method: Method, aspects: &[AspectScores], k: usize, seed: Option<u64>) -> Result<Vec<usize>> {
    if k == 0 {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }
    if aspects.is_empty() {
        return Err(Error::EmptyInput("article has no sentences"));
    }
    let n = aspects.len();
    let mut order: Vec<usize> = (0..n).collect();
    match method {
        Method::Masr3 => order.sort_by(|&a, &b| {
            let (x, y) = (&aspects[a], &aspects[b]);
            relevance_score(y)
                .cmp(&relevance_score(x))
                .then(desc_f64(x.neg_scr, y.neg_scr))
                .then(y.central_mentions.cmp(&x.central_mentions))
                .then(a.cmp(&b))
        }),
        Method::Rand3 => {
            let seed = seed.ok_or_else(|| Error::InvalidConfig("rand3 requires a seed".into()))?;
            order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        }
        Method::Lead3 => {}
        Method::Ctr3 => {
            order = filtered_then_padded(aspects, |a| a.whether_central, |x, y| {
                y.central_mentions.cmp(&x.central_mentions)
            })
        }
        Method::Pol3 => order = filtered_then_padded(aspects, |a| a.whether_neg, |x, y| desc_f64(x.neg_scr, y.neg_scr)),
        Method::Cons3 => order.sort_by(|&a, &b| {
            aspects[a].sentence_bin_sim.total_cmp(&aspects[b].sentence_bin_sim).then(a.cmp(&b))
        }),
        Method::ConsPol3 => {
            order.sort_by(|&a, &b| {
                aspects[a].sentence_bin_sim.total_cmp(&aspects[b].sentence_bin_sim).then(a.cmp(&b))
            });
            order.sort_by(|&a, &b| desc_f64(aspects[a].neg_scr, aspects[b].neg_scr));
        }
    }
    order.truncate(k.min(n));
    Ok(order)
}

pub fn rank_article(
    method: Method,
    doc: &Document,
    ctx: &RankContext<'_>,
    k: usize,
    seed: Option<u64>,
) -> Result<Vec<RankedSentence>> {
    let aspects = article_aspects(doc, ctx)?;
    let order = rank_by_aspects(method, &aspects, k, seed)?;
    Ok(order
        .into_iter()
        .map(|i| RankedSentence {
            index: i,
            text: doc.sentence_text(i).into(),
            relevance: relevance_score(&aspects[i]),
            aspects: aspects[i],
        })
        .collect())
}

pub fn masr3_rank(doc: &Document, ctx: &RankContext<'_>, k: usize) -> Result<Vec<RankedSentence>> {
    rank_article(Method::Masr3, doc, ctx, k, None)
}

pub fn baseline_rank(
    method: Method,
    doc: &Document,
    ctx: &RankContext<'_>,
    seed: Option<u64>,
    k: usize,
) -> Result<Vec<RankedSentence>> {
    rank_article(method, doc, ctx, k, seed)
}
