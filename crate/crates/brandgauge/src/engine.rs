//! Request handling shared by the command-line tool and the HTTP service.

use std::collections::BTreeMap;

use brandgauge_core::classify::{LabelVector, RankVector, TraitAssessment};
use brandgauge_core::consistency::{compare, CompanyProfile, ConsistencyReport};
use brandgauge_core::lexicon::SentimentLexicon;
use brandgauge_core::ranker::{rank_article, CentralEntitySet, Method, RankContext, RankedSentence, SentenceSim};
use brandgauge_core::text::Document;
use serde::{Deserialize, Serialize};

use crate::formats::{Bundle, Config, RankingRecord};
use crate::{Error, Result};

pub const MAX_K: usize = 10;

/// Either a known company or an explicit trait target.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Target {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub company: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label_vector: Option<LabelVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_vector: Option<RankVector>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub confidences: Option<[f64; 5]>,
}

impl Target {
    pub fn company(name: impl Into<String>) -> Self {
        Target { company: Some(name.into()), ..Default::default() }
    }

    pub fn explicit(label: LabelVector) -> Self {
        Target { label_vector: Some(label), ..Default::default() }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeOptions {
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sentence_sim: Option<SentenceSim>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub method: Option<Method>,
}

fn default_k() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalyzeRequest {
    pub text: String,
    pub target: Target,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_aliases: Option<Vec<String>>,
    #[serde(default = "AnalyzeOptions::defaults")]
    pub options: AnalyzeOptions,
}

impl AnalyzeOptions {
    fn defaults() -> Self {
        AnalyzeOptions { k: default_k(), ..Default::default() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeResponse {
    pub assessment: TraitAssessment,
    pub consistency: ConsistencyReport,
    pub method: Method,
    pub sentences: Vec<RankedSentence>,
    pub bundle_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScoreRequest {
    pub text: String,
    #[serde(default)]
    pub aliases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreResponse {
    pub assessment: TraitAssessment,
    pub bundle_version: String,
}

/// Compares a text, or an already computed assessment, with a target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConsistencyRequest {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub confidences: Option<[f64; 5]>,
    pub target: Target,
    #[serde(default)]
    pub aliases: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyResponse {
    pub assessment: TraitAssessment,
    pub profile: CompanyProfile,
    pub report: ConsistencyReport,
    pub bundle_version: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RankRequest {
    #[serde(default = "default_article_id")]
    pub article_id: String,
    pub text: String,
    pub target: Target,
    #[serde(default = "default_method")]
    pub method: Method,
    #[serde(default = "default_k")]
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Overrides the service's central entities for this request.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_entities: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub central_aliases: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sentence_sim: Option<SentenceSim>,
}

fn default_article_id() -> String {
    "article".into()
}

fn default_method() -> Method {
    Method::Masr3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RankResponse {
    #[serde(flatten)]
    pub ranking: RankingRecord,
    pub bundle_version: String,
}

/// Immutable state loaded once: config, model bundle, sentiment lexicon,
/// company profiles and default central entities.
#[derive(Debug, Clone)]
pub struct Engine {
    config: Config,
    bundle: Bundle,
    sentiment: SentimentLexicon,
    profiles: BTreeMap<String, CompanyProfile>,
    entities: Vec<String>,
}

fn non_blank(text: &str) -> Result<()> {
    if text.trim().is_empty() {
        return Err(Error::Invalid("text is empty".into()));
    }
    Ok(())
}

impl Engine {
    pub fn new(
        config: Config,
        bundle: Bundle,
        profiles: BTreeMap<String, CompanyProfile>,
        entities: Vec<String>,
    ) -> Result<Self> {
        let sentiment = config.sentiment_lexicon()?;
        Ok(Engine { config, bundle, sentiment, profiles, entities })
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn bundle_version(&self) -> &str {
        &self.bundle.version
    }

    pub fn profiles(&self) -> &BTreeMap<String, CompanyProfile> {
        &self.profiles
    }

    pub fn profile(&self, company: &str) -> Result<&CompanyProfile> {
        self.profiles.get(company).ok_or_else(|| Error::UnknownCompany(company.into()))
    }

    /// Resolves a target to a profile, checking that exactly one form is given.
    pub fn resolve_target(&self, target: &Target) -> Result<CompanyProfile> {
        match (&target.company, &target.label_vector) {
            (Some(c), None) => {
                if target.rank_vector.is_some() || target.confidences.is_some() {
                    return Err(Error::Invalid("target.company cannot be combined with explicit vectors".into()));
                }
                self.profile(c).cloned()
            }
            (None, Some(label)) => {
                if let Some(c) = &target.confidences {
                    if c.iter().any(|v| !(0.0..=1.0).contains(v)) {
                        return Err(Error::Invalid("target.confidences must lie in [0, 1]".into()));
                    }
                }
                Ok(CompanyProfile::explicit("", *label, target.rank_vector, target.confidences))
            }
            (Some(_), Some(_)) => Err(Error::Invalid("target must give either company or label_vector, not both".into())),
            (None, None) => Err(Error::Invalid("target must give company or label_vector".into())),
        }
    }

    pub fn assess(&self, text: &str, aliases: &[String]) -> Result<TraitAssessment> {
        non_blank(text)?;
        Ok(self.bundle.scorer.assess_document(&Document::from_text("", text), aliases)?)
    }

    pub fn score(&self, req: &ScoreRequest) -> Result<ScoreResponse> {
        Ok(ScoreResponse {
            assessment: self.assess(&req.text, &req.aliases)?,
            bundle_version: self.bundle.version.clone(),
        })
    }

    pub fn consistency(&self, req: &ConsistencyRequest) -> Result<ConsistencyResponse> {
        let profile = self.resolve_target(&req.target)?;
        let assessment = match (&req.text, &req.confidences) {
            (Some(text), None) => self.assess(text, &req.aliases)?,
            (None, Some(c)) => {
                if c.iter().any(|v| !(0.0..=1.0).contains(v)) {
                    return Err(Error::Invalid("confidences must lie in [0, 1]".into()));
                }
                TraitAssessment::from_confidences(*c, self.bundle.scorer.label_threshold())
            }
            _ => return Err(Error::Invalid("give exactly one of text or confidences".into())),
        };
        let report = compare(&assessment, &profile, &self.config.levels);
        Ok(ConsistencyResponse { assessment, profile, report, bundle_version: self.bundle.version.clone() })
    }

    fn central_set(&self, target: &Target, entities: Option<&[String]>, aliases: Option<&[String]>) -> CentralEntitySet {
        let aliases: Vec<String> = match (aliases, &target.company) {
            (Some(a), _) => a.to_vec(),
            (None, Some(c)) => vec![c.clone()],
            (None, None) => Vec::new(),
        };
        let entities = entities.unwrap_or(&self.entities);
        CentralEntitySet::new(entities.iter().chain(&aliases), aliases.clone(), self.config.resolve_pronouns)
    }

    #[allow(clippy::too_many_arguments)]
    fn ranked(
        &self,
        doc: &Document,
        profile: &CompanyProfile,
        central: &CentralEntitySet,
        method: Method,
        k: usize,
        seed: Option<u64>,
        sim: Option<SentenceSim>,
    ) -> Result<Vec<RankedSentence>> {
        if !(1..=MAX_K).contains(&k) {
            return Err(Error::Invalid(format!("k must be between 1 and {MAX_K}, got {k}")));
        }
        if method == Method::Rand3 && seed.is_none() {
            return Err(Error::Invalid("rand3 requires a seed".into()));
        }
        let ctx = RankContext {
            central,
            profile,
            sentiment: &self.sentiment,
            assessor: &self.bundle.scorer,
            sentence_sim: sim.unwrap_or(self.config.sentence_sim),
        };
        Ok(rank_article(method, doc, &ctx, k, seed)?)
    }

    pub fn rank(&self, req: &RankRequest) -> Result<RankResponse> {
        non_blank(&req.text)?;
        let profile = self.resolve_target(&req.target)?;
        let central = self.central_set(&req.target, req.central_entities.as_deref(), req.central_aliases.as_deref());
        let doc = Document::from_text(req.article_id.as_str(), req.text.as_str());
        let sentences = self.ranked(&doc, &profile, &central, req.method, req.k, req.seed, req.sentence_sim)?;
        let ranking = RankingRecord {
            article_id: req.article_id.clone(),
            method: req.method,
            k: req.k,
            seed: req.seed,
            sentences,
            article_sentences: (0..doc.sentences().len()).map(|i| doc.sentence_text(i).to_string()).collect(),
        };
        Ok(RankResponse { ranking, bundle_version: self.bundle.version.clone() })
    }

    pub fn analyze(&self, req: &AnalyzeRequest) -> Result<AnalyzeResponse> {
        non_blank(&req.text)?;
        let profile = self.resolve_target(&req.target)?;
        let central = self.central_set(&req.target, None, req.central_aliases.as_deref());
        let aliases = central.company_aliases().to_vec();
        let doc = Document::from_text("", req.text.as_str());
        let assessment = self.bundle.scorer.assess_document(&doc, &aliases)?;
        let consistency = compare(&assessment, &profile, &self.config.levels);
        let method = req.options.method.unwrap_or(Method::Masr3);
        let o = &req.options;
        let sentences = self.ranked(&doc, &profile, &central, method, o.k, o.seed, o.sentence_sim)?;
        Ok(AnalyzeResponse { assessment, consistency, method, sentences, bundle_version: self.bundle.version.clone() })
    }
}
