use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::model::{train_trait_model, LabeledExample, TrainConfig};
use super::TraitId;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BinaryMetrics {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

/// Positive-class precision, recall and F1; an empty denominator yields 0.
pub fn binary_metrics(predicted: &[bool], truth: &[bool]) -> Result<BinaryMetrics> {
    if predicted.len() != truth.len() {
        return Err(Error::LengthMismatch(predicted.len(), truth.len()));
    }
    let (mut tp, mut fp, mut fne) = (0usize, 0usize, 0usize);
    for (&p, &t) in predicted.iter().zip(truth) {
        match (p, t) {
            (true, true) => tp += 1,
            (true, false) => fp += 1,
            (false, true) => fne += 1,
            (false, false) => {}
        }
    }
    let ratio = |a: usize, b: usize| if b == 0 { 0.0 } else { a as f64 / b as f64 };
    let precision = ratio(tp, tp + fp);
    let recall = ratio(tp, tp + fne);
    let f1 = if precision + recall == 0.0 {
        0.0
    } else {
        2.0 * precision * recall / (precision + recall)
    };
    Ok(BinaryMetrics { precision, recall, f1 })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CvReport {
    pub trait_id: TraitId,
    pub folds: Vec<BinaryMetrics>,
    pub mean: BinaryMetrics,
}

/// Stratified k-fold evaluation; oversampling happens inside each training fold.
pub fn cross_validate(
    examples: &[LabeledExample],
    trait_id: TraitId,
    folds: usize,
    config: &TrainConfig,
) -> Result<CvReport> {
    let labelled: Vec<(usize, bool)> = examples
        .iter()
        .enumerate()
        .filter_map(|(i, e)| e.label(trait_id).map(|l| (i, l)))
        .collect();
    let mut pos: Vec<usize> = labelled.iter().filter(|(_, l)| *l).map(|(i, _)| *i).collect();
    let mut neg: Vec<usize> = labelled.iter().filter(|(_, l)| !*l).map(|(i, _)| *i).collect();
    if pos.is_empty() || neg.is_empty() {
        return Err(Error::SingleClass(trait_id));
    }
    let smallest = pos.len().min(neg.len());
    if folds < 2 || folds > smallest {
        return Err(Error::InvalidConfig(alloc::format!(
            "folds must be in [2, {smallest}] for trait {trait_id}, got {folds}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    pos.shuffle(&mut rng);
    neg.shuffle(&mut rng);
    let mut fold_of = alloc::vec![usize::MAX; examples.len()];
    for class in [&pos, &neg] {
        for (k, &i) in class.iter().enumerate() {
            fold_of[i] = k % folds;
        }
    }
    let mut reports = Vec::with_capacity(folds);
    for f in 0..folds {
        let train: Vec<&LabeledExample> = labelled
            .iter()
            .filter(|(i, _)| fold_of[*i] != f)
            .map(|(i, _)| &examples[*i])
            .collect();
        let model = train_trait_model(&train, trait_id, config)?;
        let mut predicted = Vec::new();
        let mut truth = Vec::new();
        for &(i, l) in labelled.iter().filter(|(i, _)| fold_of[*i] == f) {
            predicted.push(model.confidence(&examples[i].features)? >= 0.5);
            truth.push(l);
        }
        reports.push(binary_metrics(&predicted, &truth)?);
    }
    let k = folds as f64;
    let mean = BinaryMetrics {
        precision: reports.iter().map(|m| m.precision).sum::<f64>() / k,
        recall: reports.iter().map(|m| m.recall).sum::<f64>() / k,
        f1: reports.iter().map(|m| m.f1).sum::<f64>() / k,
    };
    Ok(CvReport { trait_id, folds: reports, mean })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn constant_positive_on_70_30() {
        let truth: Vec<bool> = (0..10).map(|i| i < 7).collect();
        let m = binary_metrics(&[true; 10], &truth).unwrap();
        assert!((m.precision - 0.7).abs() < 1e-12);
        assert_eq!(m.recall, 1.0);
        assert!((m.f1 - 14.0 / 17.0).abs() < 1e-12);
        assert!((m.f1 - 0.824).abs() < 1e-3);
    }

    #[test]
    fn zero_division_is_zero() {
        let m = binary_metrics(&[false, false], &[true, false]).unwrap();
        assert_eq!(m, BinaryMetrics::default());
        assert!(binary_metrics(&[true], &[]).is_err());
    }

    #[test]
    fn fold_bounds() {
        let ex: Vec<LabeledExample> = (0..6)
            .map(|i| {
                LabeledExample::new(
                    crate::features::FeatureVector::from_raw(vec![i as f64]).unwrap(),
                    [Some(i % 2 == 0), None, None, None, None],
                )
                .unwrap()
            })
            .collect();
        let cfg = TrainConfig::default();
        assert!(cross_validate(&ex, TraitId::Sincerity, 0, &cfg).is_err());
        assert!(cross_validate(&ex, TraitId::Sincerity, 1, &cfg).is_err());
        assert!(cross_validate(&ex, TraitId::Sincerity, 4, &cfg).is_err());
        assert_eq!(cross_validate(&ex, TraitId::Sincerity, 3, &cfg).unwrap().folds.len(), 3);
    }
}
