use std::collections::BTreeMap;
use std::path::Path;

use brandgauge_core::classify::{LabelVector, RankVector, TraitAssessment, TraitId};
use brandgauge_core::consistency::CompanyProfile;
use brandgauge_core::eval::GoldAnnotation;
use brandgauge_core::ranker::{Method, RankedSentence};
use chrono::NaiveDate;
use serde::{Deserialize, Serialize};

use super::{fmt_f64, read_text};
use crate::{Error, Result};

const PROFILE_HEADER: &str = "# company\tlabel\trank\tconfidences\tstatic_post_count";

/// One profile per line: `company<TAB>label bits<TAB>ranks<TAB>confidences<TAB>count`.
/// Ranks and confidences are comma-separated; `-` marks absent confidences.
pub fn write_profiles<'a>(profiles: impl IntoIterator<Item = &'a CompanyProfile>) -> String {
    let mut out = format!("{PROFILE_HEADER}\n");
    for p in profiles {
        let ranks: Vec<String> = p.representative_rank.ranks().iter().map(u8::to_string).collect();
        let conf = match &p.representative_confidences {
            Some(c) => c.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(","),
            None => "-".into(),
        };
        out.push_str(&format!(
            "{}\t{}\t{}\t{conf}\t{}\n",
            p.company,
            p.representative_label,
            ranks.join(","),
            p.static_post_count
        ));
    }
    out
}

pub fn parse_profiles(label: &str, input: &str) -> Result<BTreeMap<String, CompanyProfile>> {
    let mut out = BTreeMap::new();
    for (i, line) in input.lines().enumerate() {
        let n = i + 1;
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        let [company, bits, ranks, conf, count] = fields[..] else {
            return Err(Error::format(label, n, format!("expected 5 tab-separated fields, found {}", fields.len())));
        };
        let bad = |what: &str| Error::format(label, n, format!("invalid {what}"));
        let representative_confidences = if conf == "-" {
            None
        } else {
            let vs: Vec<f64> = conf.split(',').map(|v| v.trim().parse()).collect::<Result<_, _>>().map_err(|_| bad("confidences"))?;
            let arr: [f64; 5] = vs.try_into().map_err(|_| bad("confidences: need 5 values"))?;
            if arr.iter().any(|c| !(0.0..=1.0).contains(c)) {
                return Err(bad("confidences: values must lie in [0, 1]"));
            }
            Some(arr)
        };
        let profile = CompanyProfile {
            company: company.into(),
            representative_label: LabelVector::parse(bits).map_err(|_| bad("label bits"))?,
            representative_rank: RankVector::parse(ranks).map_err(|_| bad("rank permutation"))?,
            representative_confidences,
            static_post_count: count.parse().map_err(|_| bad("static_post_count"))?,
        };
        if out.insert(company.to_string(), profile).is_some() {
            return Err(Error::format(label, n, format!("duplicate company {company:?}")));
        }
    }
    Ok(out)
}

pub fn read_profiles(path: &Path) -> Result<BTreeMap<String, CompanyProfile>> {
    parse_profiles(&path.display().to_string(), &read_text(path)?)
}

/// A JSON array of `{article_id, gold_sentence_indices}` records.
pub fn read_gold(path: &Path) -> Result<Vec<GoldAnnotation>> {
    let text = read_text(path)?;
    let de = &mut serde_json::Deserializer::from_str(&text);
    serde_path_to_error::deserialize(de)
        .map_err(|e| Error::format(path.display(), e.inner().line(), format!("{} at {}", e.inner(), e.path())))
}

/// One central-entity phrase per line; `#` comments and blank lines skipped.
pub fn read_entities(path: &Path) -> Result<Vec<String>> {
    Ok(read_text(path)?
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(String::from)
        .collect())
}

/// A trait annotation: a presence flag, or a mean rating binarized at 3.0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LabelValue {
    Flag(bool),
    Rating(f64),
}

impl LabelValue {
    pub const RATING_THRESHOLD: f64 = 3.0;

    pub fn present(self) -> bool {
        match self {
            LabelValue::Flag(b) => b,
            LabelValue::Rating(r) => r >= Self::RATING_THRESHOLD,
        }
    }
}

/// A labeled training text.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainingRecord {
    #[serde(default)]
    pub id: Option<String>,
    pub text: String,
    #[serde(default)]
    pub company: Option<String>,
    #[serde(default)]
    pub aliases: Vec<String>,
    pub labels: BTreeMap<String, LabelValue>,
}

impl TrainingRecord {
    /// Per-trait labels in canonical order; unknown trait names are errors.
    pub fn trait_labels(&self) -> Result<[Option<bool>; 5]> {
        let mut out = [None; 5];
        for (name, v) in &self.labels {
            let t = TraitId::from_name(name).ok_or_else(|| Error::Invalid(format!("unknown trait {name:?}")))?;
            out[t.index()] = Some(v.present());
        }
        if out.iter().all(Option::is_none) {
            return Err(Error::Invalid("record has no trait labels".into()));
        }
        Ok(out)
    }
}

/// A scored corpus record.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AssessmentRecord {
    pub id: String,
    pub company: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub url: Option<String>,
    /// `static`, `dynamic`, `excluded` or `unknown`.
    pub page_type: String,
    pub timestamp: Option<NaiveDate>,
    pub confidences: [f64; 5],
    pub label_vector: LabelVector,
    pub rank_vector: RankVector,
}

impl AssessmentRecord {
    pub fn assessment(&self) -> TraitAssessment {
        TraitAssessment {
            confidences: self.confidences,
            label_vector: self.label_vector,
            rank_vector: self.rank_vector,
        }
    }
}

/// One ranked article as written by `rank` and read by `eval`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankingRecord {
    pub article_id: String,
    pub method: Method,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub sentences: Vec<RankedSentence>,
    pub article_sentences: Vec<String>,
}
