use serde::{Deserialize, Serialize};

use super::similarity::{bin_label_sim, rank_label_sim};
use super::CompanyProfile;
use crate::classify::TraitAssessment;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConsistencyLevel {
    NotConsistent,
    Consistent,
    StronglyConsistent,
}

impl ConsistencyLevel {
    pub fn name(self) -> &'static str {
        match self {
            ConsistencyLevel::NotConsistent => "not_consistent",
            ConsistencyLevel::Consistent => "consistent",
            ConsistencyLevel::StronglyConsistent => "strongly_consistent",
        }
    }

    pub fn is_consistent(self) -> bool {
        self != ConsistencyLevel::NotConsistent
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelThresholds {
    pub strong_bin: f64,
    pub strong_rank: f64,
    pub not_bin: f64,
}

impl Default for LevelThresholds {
    fn default() -> Self {
        LevelThresholds {
            strong_bin: 0.8,
            strong_rank: 0.6,
            not_bin: 0.5,
        }
    }
}

impl LevelThresholds {
    pub fn level(&self, bin_sim: f64, rank_sim: f64) -> ConsistencyLevel {
        if bin_sim >= self.strong_bin && rank_sim >= self.strong_rank {
            ConsistencyLevel::StronglyConsistent
        } else if bin_sim <= self.not_bin {
            ConsistencyLevel::NotConsistent
        } else {
            ConsistencyLevel::Consistent
        }
    }
}

pub fn consistency_level(bin_sim: f64, rank_sim: f64) -> ConsistencyLevel {
    LevelThresholds::default().level(bin_sim, rank_sim)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ConsistencyReport {
    pub bin_label_sim: f64,
    pub rank_label_sim: f64,
    pub level: ConsistencyLevel,
}

/// Compares one assessed post against a company's target personality.
pub fn compare(assessment: &TraitAssessment, profile: &CompanyProfile, thresholds: &LevelThresholds) -> ConsistencyReport {
    let bin = bin_label_sim(&assessment.label_vector, &profile.representative_label);
    let rank = rank_label_sim(
        &assessment.rank_vector,
        &profile.representative_rank,
        Some(&assessment.confidences),
        profile.representative_confidences.as_ref(),
    );
    ConsistencyReport {
        bin_label_sim: bin,
        rank_label_sim: rank,
        level: thresholds.level(bin, rank),
    }
}

/// Fraction of reports that are consistent or strongly consistent.
pub fn brand_cons_score(reports: &[ConsistencyReport]) -> Result<f64> {
    if reports.is_empty() {
        return Err(Error::EmptyInput("no consistency reports"));
    }
    let good = reports.iter().filter(|r| r.level.is_consistent()).count();
    Ok(good as f64 / reports.len() as f64)
}

pub(crate) fn levels_score(levels: &[ConsistencyLevel]) -> f64 {
    levels.iter().filter(|l| l.is_consistent()).count() as f64 / levels.len() as f64
}
