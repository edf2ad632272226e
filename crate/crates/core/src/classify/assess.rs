use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{LabelVector, RankVector, TraitId, TraitModel};
use crate::features::FeatureVector;
use crate::{Error, Result};

/// Confidences, presence bits and ranks for the five traits of one text.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TraitAssessment {
    pub confidences: [f64; 5],
    pub label_vector: LabelVector,
    pub rank_vector: RankVector,
}

impl TraitAssessment {
    pub fn from_confidences(confidences: [f64; 5], threshold: f64) -> Self {
        TraitAssessment {
            confidences,
            label_vector: LabelVector(confidences.map(|c| c >= threshold)),
            rank_vector: RankVector::from_scores(&confidences),
        }
    }

    pub fn max_confidence(&self) -> f64 {
        self.confidences.iter().copied().fold(f64::NEG_INFINITY, f64::max)
    }
}

/// Exactly one trained model per trait.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelSet {
    models: Vec<TraitModel>,
}

impl ModelSet {
    pub fn new(models: Vec<TraitModel>) -> Result<Self> {
        let mut slots: [Option<TraitModel>; 5] = Default::default();
        for m in models {
            let slot = &mut slots[m.trait_id.index()];
            if slot.is_some() {
                return Err(Error::DuplicateTrait(m.trait_id));
            }
            *slot = Some(m);
        }
        let mut ordered = Vec::with_capacity(5);
        for (t, slot) in TraitId::ALL.into_iter().zip(slots) {
            ordered.push(slot.ok_or(Error::MissingTrait(t))?);
        }
        Ok(ModelSet { models: ordered })
    }

    pub fn get(&self, t: TraitId) -> &TraitModel {
        &self.models[t.index()]
    }

    pub fn iter(&self) -> impl Iterator<Item = &TraitModel> {
        self.models.iter()
    }

    pub fn into_models(self) -> Vec<TraitModel> {
        self.models
    }

    pub fn confidences(&self, fv: &FeatureVector) -> Result<[f64; 5]> {
        let mut out = [0.0; 5];
        for (o, m) in out.iter_mut().zip(&self.models) {
            *o = m.confidence(fv)?;
        }
        Ok(out)
    }

    pub fn assess_with_threshold(&self, fv: &FeatureVector, threshold: f64) -> Result<TraitAssessment> {
        Ok(TraitAssessment::from_confidences(self.confidences(fv)?, threshold))
    }
}

/// Assessment with the default 0.5 label threshold.
pub fn assess(models: &ModelSet, fv: &FeatureVector) -> Result<TraitAssessment> {
    models.assess_with_threshold(fv, 0.5)
}
