//! Fits a feature extractor and the five trait models from labeled texts.

use brandgauge_core::classify::{cross_validate, train_trait_model, CvReport, LabeledExample, ModelSet, TraitId};
use brandgauge_core::features::{tfidf_fit, BlockMask, FeatureExtractor};
use brandgauge_core::text::Document;

use crate::formats::{Config, TrainingRecord};
use crate::{Error, Result};

pub struct Trained {
    pub extractor: FeatureExtractor,
    pub models: ModelSet,
    /// One report per trait when cross-validation ran.
    pub cv: Vec<CvReport>,
}

fn documents(records: &[TrainingRecord]) -> Vec<Document> {
    records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let id = r.id.clone().unwrap_or_else(|| format!("example-{}", i + 1));
            Document::new(id, r.company.clone().unwrap_or_default(), r.text.as_str())
        })
        .collect()
}

/// Trains on `records`; `folds >= 2` also runs stratified cross-validation,
/// whose mean F1 is recorded in each model's metadata.
pub fn train(records: &[TrainingRecord], config: &Config, folds: usize) -> Result<Trained> {
    if records.is_empty() {
        return Err(Error::Invalid("no training examples".into()));
    }
    let labels: Vec<[Option<bool>; 5]> = records
        .iter()
        .enumerate()
        .map(|(i, r)| r.trait_labels().map_err(|e| Error::Invalid(format!("example {}: {e}", i + 1))))
        .collect::<Result<_>>()?;
    let docs = documents(records);
    let stopwords = config.stopwords()?;
    let tfidf = tfidf_fit(&docs, &config.tfidf, &stopwords)?;
    let extractor = FeatureExtractor::new(
        config.category_lexicon()?,
        config.contractions()?,
        config.collocations()?,
        stopwords,
        tfidf,
    )?;
    let examples: Vec<LabeledExample> = docs
        .iter()
        .zip(records)
        .zip(labels)
        .enumerate()
        .map(|(i, ((doc, r), l))| {
            let fv = extractor
                .extract(doc, &r.aliases, BlockMask::all())
                .map_err(|e| Error::Invalid(format!("example {}: {e}", i + 1)))?;
            Ok(LabeledExample::new(fv, l)?)
        })
        .collect::<Result<_>>()?;

    let mut models = Vec::with_capacity(5);
    let mut cv = Vec::new();
    for t in TraitId::ALL {
        let mut tc = config.train.clone();
        tc.block_mask = config.masks[t.index()];
        let mut model = train_trait_model(&examples, t, &tc)?;
        if folds >= 2 {
            let report = cross_validate(&examples, t, folds, &tc)?;
            model.meta.cv_folds = Some(folds);
            model.meta.cv_f1 = Some(report.mean.f1);
            cv.push(report);
        }
        models.push(model);
    }
    Ok(Trained { extractor, models: ModelSet::new(models)?, cv })
}
