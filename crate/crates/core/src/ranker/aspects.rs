use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::CentralEntitySet;
use crate::classify::LabelVector;
use crate::consistency::{bin_label_sim, CompanyProfile};
use crate::lexicon::{sentiment_scores, SentimentLexicon};
use crate::pipeline::TextAssessor;
use crate::text::Document;
use crate::{Error, Result};

/// How a sentence's label vector is compared with the target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SentenceSim {
    /// The document-level Hamming + Levenshtein similarity.
    #[default]
    HammingLevenshtein,
    HammingOnly,
}

impl SentenceSim {
    pub fn similarity(self, a: &LabelVector, b: &LabelVector) -> f64 {
        match self {
            SentenceSim::HammingLevenshtein => bin_label_sim(a, b),
            SentenceSim::HammingOnly => {
                let ham = a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count();
                1.0 - ham as f64 / 5.0
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AspectScores {
    pub whether_neg: bool,
    pub neg_scr: f64,
    pub pos_scr: f64,
    pub whether_central: bool,
    pub central_mentions: usize,
    pub sentence_bin_sim: f64,
}

impl AspectScores {
    /// Builds aspects from raw scores, deriving the two flags.
    pub fn new(neg_scr: f64, pos_scr: f64, central_mentions: usize, sentence_bin_sim: f64) -> Self {
        AspectScores {
            whether_neg: neg_scr > pos_scr,
            neg_scr,
            pos_scr,
            whether_central: central_mentions >= 1,
            central_mentions,
            sentence_bin_sim,
        }
    }
}

/// 6: negative and central; 5: negative only; 4/3: central with low/high
/// similarity to the target; 2/1: neither, with low/high similarity.
pub fn relevance_score(a: &AspectScores) -> u8 {
    let inconsistent = a.sentence_bin_sim <= 0.5;
    match (a.whether_neg, a.whether_central, inconsistent) {
        (true, true, _) => 6,
        (true, false, _) => 5,
        (false, true, true) => 4,
        (false, true, false) => 3,
        (false, false, true) => 2,
        (false, false, false) => 1,
    }
}

/// Everything a ranker needs besides the article itself.
#[derive(Clone, Copy)]
pub struct RankContext<'a> {
    pub central: &'a CentralEntitySet,
    pub profile: &'a CompanyProfile,
    pub sentiment: &'a SentimentLexicon,
    pub assessor: &'a dyn TextAssessor,
    pub sentence_sim: SentenceSim,
}

pub fn sentence_aspects(doc: &Document, sentence: usize, ctx: &RankContext<'_>) -> Result<AspectScores> {
    let tokens = doc.sentence_tokens(sentence);
    if tokens.is_empty() {
        return Err(Error::EmptyInput("empty sentence"));
    }
    let senti = sentiment_scores(tokens, ctx.sentiment)?;
    let mentions = ctx.central.mentions(tokens);
    // a sentence without words carries no trait signal, so it is never flagged as inconsistent
    let sim = if tokens.iter().any(|t| t.is_word) {
        let assessment = ctx.assessor.assess_text(doc.sentence_text(sentence), ctx.central.company_aliases())?;
        ctx.sentence_sim.similarity(&assessment.label_vector, &ctx.profile.representative_label)
    } else {
        1.0
    };
    Ok(AspectScores::new(senti.neg, senti.pos, mentions, sim))
}

pub fn article_aspects(doc: &Document, ctx: &RankContext<'_>) -> Result<Vec<AspectScores>> {
    if doc.sentences().is_empty() {
        return Err(Error::EmptyInput("article has no sentences"));
    }
    (0..doc.sentences().len()).map(|i| sentence_aspects(doc, i, ctx)).collect()
}
