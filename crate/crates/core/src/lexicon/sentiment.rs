use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::text::{normalize_token, Token};
use crate::{Error, Result};

/// Window sizes and the negation factor used when adjusting valences.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SentimentRules {
    /// How many preceding word tokens are searched for a negator.
    pub negation_window: usize,
    /// Multiplier applied to a negated valence.
    pub negation_factor: f64,
    /// How many preceding word tokens are searched for a booster.
    pub booster_window: usize,
}

impl Default for SentimentRules {
    fn default() -> Self {
        SentimentRules {
            negation_window: 3,
            negation_factor: -0.74,
            booster_window: 1,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SentimentLexicon {
    pub valence: BTreeMap<String, f64>,
    pub boosters: BTreeMap<String, f64>,
    pub negators: BTreeSet<String>,
    pub rules: SentimentRules,
}

/// Proportions of positive, negative and neutral mass in a sentence.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SentimentScores {
    pub pos: f64,
    pub neg: f64,
    pub neu: f64,
}

impl SentimentScores {
    pub fn is_negative(&self) -> bool {
        self.neg > self.pos
    }
}

/// Parses `<token>\t<valence>` lines. Valences must lie in `[-4, 4]`.
pub fn parse_sentiment_lexicon(input: &str) -> Result<BTreeMap<String, f64>> {
    let mut out = BTreeMap::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: &str| Error::Parse {
            line: i + 1,
            message: message.into(),
        };
        let mut parts = line.split('\t');
        let (Some(token), Some(value)) = (parts.next(), parts.next()) else {
            return Err(err("expected '<token><TAB><valence>'"));
        };
        let v: f64 = value.trim().parse().map_err(|_| err("invalid valence"))?;
        if !(-4.0..=4.0).contains(&v) {
            return Err(err("valence outside [-4, 4]"));
        }
        out.insert(normalize_token(token.trim()), v);
    }
    Ok(out)
}

/// Parses a one-token-per-line list. Lines may carry a tab-separated scalar,
/// returned alongside (booster lists use it).
pub fn parse_word_list(input: &str) -> Result<Vec<(String, Option<f64>)>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split('\t');
        let token = normalize_token(parts.next().unwrap_or_default().trim());
        let scalar = match parts.next() {
            Some(v) => Some(v.trim().parse::<f64>().map_err(|_| Error::Parse {
                line: i + 1,
                message: "invalid scalar".into(),
            })?),
            None => None,
        };
        out.push((token, scalar));
    }
    Ok(out)
}

impl SentimentLexicon {
    /// Adjusted valence of each word token, in order. Tokens absent from the
    /// valence map yield `None`.
    pub fn adjusted_valences(&self, tokens: &[Token]) -> Vec<Option<f64>> {
        let words: Vec<&str> = tokens.iter().filter(|t| t.is_word).map(|t| t.lower.as_str()).collect();
        let rules = &self.rules;
        words
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let mut v = *self.valence.get(*w)?;
                if v == 0.0 {
                    return Some(0.0);
                }
                let sign = if v > 0.0 { 1.0 } else { -1.0 };
                for prev in &words[i.saturating_sub(rules.booster_window)..i] {
                    if let Some(b) = self.boosters.get(*prev) {
                        v += sign * b;
                    }
                }
                let negated = words[i.saturating_sub(rules.negation_window)..i]
                    .iter()
                    .any(|p| self.negators.contains(*p));
                if negated {
                    v *= rules.negation_factor;
                }
                Some(v)
            })
            .collect()
    }
}

/// Scores a sentence: positive and negative adjusted valence mass and the
/// neutral-word count, each as a share of their total.
pub fn sentiment_scores(tokens: &[Token], lex: &SentimentLexicon) -> Result<SentimentScores> {
    if tokens.is_empty() {
        return Err(Error::EmptyInput("sentiment needs at least one token"));
    }
    let (mut pos, mut neg, mut neutral) = (0.0, 0.0, 0.0);
    for v in lex.adjusted_valences(tokens) {
        match v {
            Some(v) if v > 0.0 => pos += v,
            Some(v) if v < 0.0 => neg += -v,
            _ => neutral += 1.0,
        }
    }
    let total = pos + neg + neutral;
    if total == 0.0 {
        return Ok(SentimentScores {
            pos: 0.0,
            neg: 0.0,
            neu: 1.0,
        });
    }
    let (pos, neg) = (pos / total, neg / total);
    Ok(SentimentScores {
        pos,
        neg,
        neu: 1.0 - pos - neg,
    })
}
