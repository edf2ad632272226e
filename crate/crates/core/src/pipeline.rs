//! Text-to-assessment pipeline shared by document scoring and sentence ranking.

use alloc::string::String;

use serde::{Deserialize, Serialize};

use crate::classify::{ModelSet, TraitAssessment};
use crate::features::{BlockMask, FeatureExtractor, FeatureVector};
use crate::text::Document;
use crate::{Error, Result};

/// A feature extractor paired with the five trait models trained on its layout.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Scorer {
    extractor: FeatureExtractor,
    models: ModelSet,
    label_threshold: f64,
}

impl Scorer {
    pub fn new(extractor: FeatureExtractor, models: ModelSet, label_threshold: f64) -> Result<Self> {
        if !(label_threshold > 0.0 && label_threshold < 1.0) {
            return Err(Error::InvalidConfig(alloc::format!(
                "label threshold must be in (0, 1), got {label_threshold}"
            )));
        }
        for m in models.iter() {
            if m.layout_id != extractor.layout_id() {
                return Err(Error::SchemaMismatch {
                    expected: extractor.layout_id().into(),
                    found: m.layout_id.clone(),
                });
            }
        }
        Ok(Scorer { extractor, models, label_threshold })
    }

    pub fn extractor(&self) -> &FeatureExtractor {
        &self.extractor
    }

    pub fn models(&self) -> &ModelSet {
        &self.models
    }

    pub fn label_threshold(&self) -> f64 {
        self.label_threshold
    }

    /// Union of the blocks any trait model reads.
    pub fn mask(&self) -> BlockMask {
        self.models.iter().fold(BlockMask::empty(), |m, t| m.union(t.block_mask))
    }

    pub fn features(&self, doc: &Document, aliases: &[String]) -> Result<FeatureVector> {
        self.extractor.extract(doc, aliases, self.mask())
    }

    pub fn assess_document(&self, doc: &Document, aliases: &[String]) -> Result<TraitAssessment> {
        let fv = self.features(doc, aliases)?;
        self.models.assess_with_threshold(&fv, self.label_threshold)
    }
}

/// Anything that can assess a standalone piece of text.
pub trait TextAssessor {
    fn assess_text(&self, text: &str, aliases: &[String]) -> Result<TraitAssessment>;
}

impl TextAssessor for Scorer {
    fn assess_text(&self, text: &str, aliases: &[String]) -> Result<TraitAssessment> {
        self.assess_document(&Document::from_text("", text), aliases)
    }
}
