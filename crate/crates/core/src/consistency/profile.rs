use alloc::collections::BTreeMap;
use alloc::string::String;

use serde::{Deserialize, Serialize};

use super::{LabelVector, RankVector};
use crate::classify::TraitAssessment;
use crate::{Day, Error, Result};

/// A company's target personality, derived from its static posts.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompanyProfile {
    pub company: String,
    pub representative_label: LabelVector,
    pub representative_rank: RankVector,
    pub representative_confidences: Option<[f64; 5]>,
    pub static_post_count: usize,
}

impl CompanyProfile {
    /// A profile from an explicit target, e.g. manually chosen traits.
    pub fn explicit(
        company: impl Into<String>,
        label: LabelVector,
        rank: Option<RankVector>,
        confidences: Option<[f64; 5]>,
    ) -> Self {
        let rank = rank
            .or_else(|| confidences.map(|c| RankVector::from_scores(&c)))
            .unwrap_or_else(|| RankVector::from_scores(&label.0.map(|b| if b { 1.0 } else { 0.0 })));
        CompanyProfile {
            company: company.into(),
            representative_label: label,
            representative_rank: rank,
            representative_confidences: confidences,
            static_post_count: 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StaticPost {
    pub assessment: TraitAssessment,
    pub date: Option<Day>,
}

struct Tally {
    count: usize,
    latest: Option<Day>,
}

/// Most frequent value; ties go to the most recently dated, then the smallest.
fn mode<K: Ord + Copy>(items: impl Iterator<Item = (K, Option<Day>)>) -> Option<K> {
    let mut tallies: BTreeMap<K, Tally> = BTreeMap::new();
    for (k, d) in items {
        let t = tallies.entry(k).or_insert(Tally { count: 0, latest: None });
        t.count += 1;
        t.latest = t.latest.max(d);
    }
    // BTreeMap iterates ascending, and max_by keeps the last maximum, so
    // compare on reversed key order to prefer the smallest key on full ties
    tallies
        .into_iter()
        .max_by(|(ka, a), (kb, b)| a.count.cmp(&b.count).then(a.latest.cmp(&b.latest)).then(kb.cmp(ka)))
        .map(|(k, _)| k)
}

/// Builds the target profile from static-post assessments: independent modes
/// of label and rank vectors, and the mean confidences of posts sharing the
/// representative rank vector.
pub fn representative_vectors(company: &str, posts: &[StaticPost]) -> Result<CompanyProfile> {
    let label = mode(posts.iter().map(|p| (p.assessment.label_vector, p.date)))
        .ok_or(Error::EmptyInput("no static posts"))?;
    let rank = mode(posts.iter().map(|p| (p.assessment.rank_vector, p.date)))
        .ok_or(Error::EmptyInput("no static posts"))?;
    let mut sum = [0.0; 5];
    let mut n = 0usize;
    for p in posts.iter().filter(|p| p.assessment.rank_vector == rank) {
        for (s, c) in sum.iter_mut().zip(p.assessment.confidences) {
            *s += c;
        }
        n += 1;
    }
    Ok(CompanyProfile {
        company: company.into(),
        representative_label: label,
        representative_rank: rank,
        representative_confidences: Some(sum.map(|s| s / n as f64)),
        static_post_count: posts.len(),
    })
}
