use alloc::string::String;
use alloc::vec::Vec;
use core::borrow::Borrow;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::smote::smote;
use super::TraitId;
use crate::features::{BlockMask, FeatureVector, SchemaHash};
use crate::{Error, Result};

/// A feature vector with up to five per-trait binary labels.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledExample {
    pub features: FeatureVector,
    pub labels: [Option<bool>; 5],
}

impl LabeledExample {
    pub fn new(features: FeatureVector, labels: [Option<bool>; 5]) -> Result<Self> {
        if labels.iter().all(Option::is_none) {
            return Err(Error::EmptyInput("example carries no trait labels"));
        }
        Ok(LabeledExample { features, labels })
    }

    pub fn label(&self, t: TraitId) -> Option<bool> {
        self.labels[t.index()]
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainConfig {
    /// Inverse regularization strength; lambda = 1 / (c * n).
    pub c: f64,
    pub epochs: usize,
    pub seed: u64,
    pub block_mask: BlockMask,
    pub smote_k: usize,
    pub calibration_fraction: f64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            c: 1.0,
            epochs: 40,
            seed: 0,
            block_mask: BlockMask::all(),
            smote_k: 5,
            calibration_fraction: 0.2,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.c > 0.0 && self.c.is_finite()) {
            return Err(Error::InvalidConfig("c must be positive".into()));
        }
        if self.epochs == 0 {
            return Err(Error::InvalidConfig("epochs must be at least 1".into()));
        }
        if !(0.0..1.0).contains(&self.calibration_fraction) {
            return Err(Error::InvalidConfig("calibration_fraction must be in [0, 1)".into()));
        }
        if self.block_mask.is_empty() {
            return Err(Error::NoFeaturesSelected);
        }
        Ok(())
    }
}

/// Per-column centering and scaling learned on the training split.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Standardization {
    pub mean: Vec<f64>,
    pub scale: Vec<f64>,
}

impl Standardization {
    fn fit(rows: &[&[f64]]) -> Self {
        let d = rows.first().map_or(0, |r| r.len());
        let n = rows.len() as f64;
        let mut mean = alloc::vec![0.0; d];
        for r in rows {
            for (m, v) in mean.iter_mut().zip(*r) {
                *m += v;
            }
        }
        mean.iter_mut().for_each(|m| *m /= n);
        let mut var = alloc::vec![0.0; d];
        for r in rows {
            for ((s, v), m) in var.iter_mut().zip(*r).zip(&mean) {
                *s += (v - m) * (v - m);
            }
        }
        let scale = var
            .into_iter()
            .map(|s| {
                let sd = libm::sqrt(s / n);
                if sd > 1e-12 {
                    sd
                } else {
                    1.0
                }
            })
            .collect();
        Standardization { mean, scale }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(&self.mean)
            .zip(&self.scale)
            .map(|((v, m), s)| (v - m) / s)
            .collect()
    }
}

/// Maps a decision value `f` to `sigmoid(a * f + b)`; `a > 0` keeps it monotone.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Calibration {
    pub a: f64,
    pub b: f64,
}

impl Calibration {
    pub const IDENTITY: Calibration = Calibration { a: 1.0, b: 0.0 };

    pub fn confidence(&self, f: f64) -> f64 {
        sigmoid(self.a * f + self.b)
    }
}

fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + libm::exp(-z))
    } else {
        let e = libm::exp(z);
        e / (1.0 + e)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrainMeta {
    pub seed: u64,
    pub epochs: usize,
    pub c: f64,
    pub n_train: usize,
    pub n_calibration: usize,
    pub n_synthetic: usize,
    pub cv_folds: Option<usize>,
    pub cv_f1: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraitModel {
    pub trait_id: TraitId,
    pub weights: Vec<f64>,
    pub bias: f64,
    pub standardization: Standardization,
    pub calibration: Calibration,
    pub block_mask: BlockMask,
    pub layout_id: String,
    pub schema_hash: SchemaHash,
    pub meta: TrainMeta,
}

impl TraitModel {
    /// Brings `fv` onto this model's schema, masking extra blocks if needed.
    fn conform<'a>(&self, fv: &'a FeatureVector) -> Result<alloc::borrow::Cow<'a, FeatureVector>> {
        if fv.schema_hash() == &self.schema_hash {
            return Ok(alloc::borrow::Cow::Borrowed(fv));
        }
        if fv.layout_id() == self.layout_id && self.block_mask.is_subset_of(fv.mask()) {
            return Ok(alloc::borrow::Cow::Owned(fv.with_mask(self.block_mask)?));
        }
        Err(Error::SchemaMismatch {
            expected: self.schema_hash.0.clone(),
            found: fv.schema_hash().0.clone(),
        })
    }

    fn raw_decision(&self, x: &[f64]) -> f64 {
        let z = self.standardization.apply(x);
        dot(&self.weights, &z) + self.bias
    }

    pub fn decision_value(&self, fv: &FeatureVector) -> Result<f64> {
        let fv = self.conform(fv)?;
        if fv.len() != self.weights.len() {
            return Err(Error::LengthMismatch(self.weights.len(), fv.len()));
        }
        Ok(self.raw_decision(fv.values()))
    }

    pub fn confidence(&self, fv: &FeatureVector) -> Result<f64> {
        Ok(self.calibration.confidence(self.decision_value(fv)?))
    }
}

pub fn predict_confidence(model: &TraitModel, fv: &FeatureVector) -> Result<f64> {
    model.confidence(fv)
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Stratified split into (train, calibration) index lists.
fn calibration_split(
    pos: &[usize],
    neg: &[usize],
    fraction: f64,
    rng: &mut ChaCha8Rng,
) -> (Vec<usize>, Vec<usize>) {
    let mut train = Vec::new();
    let mut cal = Vec::new();
    for class in [pos, neg] {
        let mut idx = class.to_vec();
        idx.shuffle(rng);
        let n = idx.len();
        let n_cal = if fraction > 0.0 && n >= 2 {
            (libm::round(n as f64 * fraction) as usize).clamp(1, n - 1)
        } else {
            0
        };
        cal.extend_from_slice(&idx[..n_cal]);
        train.extend_from_slice(&idx[n_cal..]);
    }
    train.sort_unstable();
    cal.sort_unstable();
    (train, cal)
}

/// Averaged Pegasos on the hinge loss, with the bias as an extra regularized weight.
fn pegasos(xs: &[Vec<f64>], ys: &[f64], c: f64, epochs: usize, rng: &mut ChaCha8Rng) -> (Vec<f64>, f64) {
    let n = xs.len();
    let d = xs[0].len();
    let lambda = 1.0 / (c * n as f64);
    let radius = 1.0 / libm::sqrt(lambda);
    let mut w = alloc::vec![0.0; d];
    let mut b = 0.0;
    let mut w_avg = alloc::vec![0.0; d];
    let mut b_avg = 0.0;
    let mut n_avg = 0usize;
    let avg_from = epochs / 2;
    let mut order: Vec<usize> = (0..n).collect();
    let mut t = 0usize;
    for epoch in 0..epochs {
        order.shuffle(rng);
        for &i in &order {
            t += 1;
            let eta = 1.0 / (lambda * t as f64);
            let margin = ys[i] * (dot(&w, &xs[i]) + b);
            let shrink = 1.0 - eta * lambda;
            w.iter_mut().for_each(|v| *v *= shrink);
            b *= shrink;
            if margin < 1.0 {
                let step = eta * ys[i];
                for (wv, xv) in w.iter_mut().zip(&xs[i]) {
                    *wv += step * xv;
                }
                b += step;
            }
            let norm = libm::sqrt(dot(&w, &w) + b * b);
            if norm > radius {
                let f = radius / norm;
                w.iter_mut().for_each(|v| *v *= f);
                b *= f;
            }
            if epoch >= avg_from {
                for (a, v) in w_avg.iter_mut().zip(&w) {
                    *a += v;
                }
                b_avg += b;
                n_avg += 1;
            }
        }
    }
    let k = n_avg as f64;
    w_avg.iter_mut().for_each(|v| *v /= k);
    (w_avg, b_avg / k)
}

/// Platt scaling via Newton's method with backtracking line search
/// (Lin, Lin and Weng's formulation). Returns `(a, b)` for `sigmoid(a*f + b)`.
fn platt(decisions: &[f64], labels: &[bool]) -> Option<Calibration> {
    let prior1 = labels.iter().filter(|l| **l).count() as f64;
    let prior0 = labels.len() as f64 - prior1;
    let hi = (prior1 + 1.0) / (prior1 + 2.0);
    let lo = 1.0 / (prior0 + 2.0);
    let targets: Vec<f64> = labels.iter().map(|&l| if l { hi } else { lo }).collect();
    let objective = |a: f64, b: f64| -> f64 {
        decisions
            .iter()
            .zip(&targets)
            .map(|(f, t)| {
                let z = f * a + b;
                if z >= 0.0 {
                    t * z + libm::log1p(libm::exp(-z))
                } else {
                    (t - 1.0) * z + libm::log1p(libm::exp(z))
                }
            })
            .sum()
    };
    let (mut a, mut b) = (0.0, libm::log((prior0 + 1.0) / (prior1 + 1.0)));
    let mut fval = objective(a, b);
    for _ in 0..100 {
        let (mut h11, mut h22, mut h21, mut g1, mut g2) = (1e-12, 1e-12, 0.0, 0.0, 0.0);
        for (f, t) in decisions.iter().zip(&targets) {
            let z = f * a + b;
            let (p, q) = if z >= 0.0 {
                let e = libm::exp(-z);
                (e / (1.0 + e), 1.0 / (1.0 + e))
            } else {
                let e = libm::exp(z);
                (1.0 / (1.0 + e), e / (1.0 + e))
            };
            let d2 = p * q;
            h11 += f * f * d2;
            h22 += d2;
            h21 += f * d2;
            let d1 = t - p;
            g1 += f * d1;
            g2 += d1;
        }
        if libm::fabs(g1) < 1e-5 && libm::fabs(g2) < 1e-5 {
            break;
        }
        let det = h11 * h22 - h21 * h21;
        let da = -(h22 * g1 - h21 * g2) / det;
        let db = -(-h21 * g1 + h11 * g2) / det;
        let gd = g1 * da + g2 * db;
        let mut step = 1.0;
        let mut moved = false;
        while step >= 1e-10 {
            let (na, nb) = (a + step * da, b + step * db);
            let nf = objective(na, nb);
            if nf < fval + 1e-4 * step * gd {
                a = na;
                b = nb;
                fval = nf;
                moved = true;
                break;
            }
            step /= 2.0;
        }
        if !moved {
            break;
        }
    }
    // Platt's form is 1 / (1 + exp(A f + B)); flip signs for sigmoid(a f + b)
    let cal = Calibration { a: -a, b: -b };
    (cal.a > 0.0 && cal.a.is_finite() && cal.b.is_finite()).then_some(cal)
}

pub fn train_trait_model<E: Borrow<LabeledExample>>(
    examples: &[E],
    trait_id: TraitId,
    config: &TrainConfig,
) -> Result<TraitModel> {
    config.validate()?;
    let mut rows: Vec<FeatureVector> = Vec::new();
    let mut labels: Vec<bool> = Vec::new();
    for ex in examples {
        let ex = ex.borrow();
        if let Some(l) = ex.label(trait_id) {
            rows.push(ex.features.with_mask(config.block_mask)?);
            labels.push(l);
        }
    }
    let Some(first) = rows.first() else {
        return Err(Error::SingleClass(trait_id));
    };
    let layout_id = String::from(first.layout_id());
    let schema_hash = first.schema_hash().clone();
    for r in &rows {
        if r.schema_hash() != &schema_hash {
            return Err(Error::SchemaMismatch {
                expected: schema_hash.0.clone(),
                found: r.schema_hash().0.clone(),
            });
        }
        if let Some(i) = r.values().iter().position(|v| !v.is_finite()) {
            return Err(Error::NonFinite(i));
        }
    }
    let pos: Vec<usize> = (0..rows.len()).filter(|&i| labels[i]).collect();
    let neg: Vec<usize> = (0..rows.len()).filter(|&i| !labels[i]).collect();
    if pos.is_empty() || neg.is_empty() {
        return Err(Error::SingleClass(trait_id));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ ((trait_id.index() as u64 + 1) << 32));
    let (train_idx, cal_idx) = calibration_split(&pos, &neg, config.calibration_fraction, &mut rng);

    let train_rows: Vec<&[f64]> = train_idx.iter().map(|&i| rows[i].values()).collect();
    let standardization = Standardization::fit(&train_rows);
    let mut xs: Vec<Vec<f64>> = train_rows.iter().map(|r| standardization.apply(r)).collect();
    let mut ys: Vec<f64> = train_idx.iter().map(|&i| if labels[i] { 1.0 } else { -1.0 }).collect();

    let n_pos = ys.iter().filter(|y| **y > 0.0).count();
    let n_neg = ys.len() - n_pos;
    let (minority_label, deficit) = if n_pos < n_neg { (1.0, n_neg - n_pos) } else { (-1.0, n_pos - n_neg) };
    let minority: Vec<Vec<f64>> = xs
        .iter()
        .zip(&ys)
        .filter(|(_, y)| **y == minority_label)
        .map(|(x, _)| x.clone())
        .collect();
    let synthetic = if deficit == 0 {
        Vec::new()
    } else if minority.len() == 1 {
        alloc::vec![minority[0].clone(); deficit]
    } else {
        let smote_seed = rand::Rng::random::<u64>(&mut rng);
        smote(&minority, config.smote_k, deficit, smote_seed)?
    };
    let n_synthetic = synthetic.len();
    ys.extend(core::iter::repeat_n(minority_label, n_synthetic));
    xs.extend(synthetic);

    let (weights, bias) = pegasos(&xs, &ys, config.c, config.epochs, &mut rng);

    let mut model = TraitModel {
        trait_id,
        weights,
        bias,
        standardization,
        calibration: Calibration::IDENTITY,
        block_mask: config.block_mask,
        layout_id,
        schema_hash,
        meta: TrainMeta {
            seed: config.seed,
            epochs: config.epochs,
            c: config.c,
            n_train: train_idx.len(),
            n_calibration: cal_idx.len(),
            n_synthetic,
            cv_folds: None,
            cv_f1: None,
        },
    };
    let cal_source = if cal_idx.is_empty() { &train_idx } else { &cal_idx };
    let decisions: Vec<f64> = cal_source.iter().map(|&i| model.raw_decision(rows[i].values())).collect();
    let cal_labels: Vec<bool> = cal_source.iter().map(|&i| labels[i]).collect();
    model.calibration = platt(&decisions, &cal_labels).unwrap_or(Calibration::IDENTITY);
    Ok(model)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn blobs(n: usize, seed: u64) -> Vec<LabeledExample> {
        use rand::Rng;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..n)
            .map(|i| {
                let pos = i % 2 == 0;
                let c = if pos { 3.0 } else { -3.0 };
                let x = vec![c + rng.random_range(-1.0..1.0), c + rng.random_range(-1.0..1.0)];
                LabeledExample::new(FeatureVector::from_raw(x).unwrap(), [Some(pos), None, None, None, None])
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn separable_blobs_train_perfectly() {
        let data = blobs(200, 1);
        let m = train_trait_model(&data, TraitId::Sincerity, &TrainConfig::default()).unwrap();
        for ex in &data {
            let conf = m.confidence(&ex.features).unwrap();
            assert_eq!(conf >= 0.5, ex.labels[0].unwrap());
        }
        let deep = FeatureVector::from_raw(vec![6.0, 6.0]).unwrap();
        assert!(m.confidence(&deep).unwrap() > 0.9);
        assert!(m.calibration.a > 0.0);
    }

    #[test]
    fn deterministic() {
        let data = blobs(60, 2);
        let a = train_trait_model(&data, TraitId::Sincerity, &TrainConfig::default()).unwrap();
        let b = train_trait_model(&data, TraitId::Sincerity, &TrainConfig::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn single_class_and_schema_errors() {
        let mut data = blobs(10, 3);
        for ex in &mut data {
            ex.labels[0] = Some(true);
        }
        assert_eq!(
            train_trait_model(&data, TraitId::Sincerity, &TrainConfig::default()),
            Err(Error::SingleClass(TraitId::Sincerity))
        );
        assert_eq!(
            train_trait_model(&data, TraitId::Excitement, &TrainConfig::default()),
            Err(Error::SingleClass(TraitId::Excitement))
        );
        let data = blobs(20, 3);
        let m = train_trait_model(&data, TraitId::Sincerity, &TrainConfig::default()).unwrap();
        let other = FeatureVector::from_raw(vec![1.0, 2.0, 3.0]).unwrap();
        assert!(matches!(m.confidence(&other), Err(Error::SchemaMismatch { .. })));
    }

    #[test]
    fn boundary_maps_to_sigmoid_b() {
        let cal = Calibration { a: 2.0, b: -0.3 };
        assert!((cal.confidence(0.0) - sigmoid(-0.3)).abs() < 1e-15);
        assert!(cal.confidence(1.0) > cal.confidence(0.5));
    }

    #[test]
    fn platt_recovers_orientation() {
        let f = [-2.0, -1.5, -1.0, -0.2, 0.3, 1.0, 1.6, 2.2];
        let y = [false, false, false, true, false, true, true, true];
        let cal = platt(&f, &y).unwrap();
        assert!(cal.a > 0.0);
        assert!(cal.confidence(2.0) > 0.5 && cal.confidence(-2.0) < 0.5);
        let inverted: Vec<bool> = y.iter().map(|v| !v).collect();
        assert!(platt(&f, &inverted).is_none());
    }
}
