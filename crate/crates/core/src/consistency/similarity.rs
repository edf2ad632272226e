use serde::{Deserialize, Serialize};

use super::{LabelVector, RankVector};
use crate::stats;

/// `1 - (hamming/5 + levenshtein/5) / 2` over the two 5-bit strings.
pub fn bin_label_sim(a: &LabelVector, b: &LabelVector) -> f64 {
    let ham = a.0.iter().zip(&b.0).filter(|(x, y)| x != y).count();
    let lev = stats::levenshtein(&a.0, &b.0);
    1.0 - (ham as f64 / 5.0 + lev as f64 / 5.0) / 2.0
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RankSimComponents {
    /// Absent when either side has no confidences.
    pub pearson: Option<f64>,
    pub spearman: f64,
    pub kendall: f64,
}

impl RankSimComponents {
    pub fn mean(&self) -> f64 {
        match self.pearson {
            Some(p) => (p + self.spearman + self.kendall) / 3.0,
            None => (self.spearman + self.kendall) / 2.0,
        }
    }
}

fn pearson_or_fallback(a: &[f64; 5], b: &[f64; 5]) -> f64 {
    stats::pearson(a, b).unwrap_or(if a == b { 1.0 } else { 0.0 })
}

pub fn rank_label_components(
    rank_a: &RankVector,
    rank_b: &RankVector,
    conf_a: Option<&[f64; 5]>,
    conf_b: Option<&[f64; 5]>,
) -> RankSimComponents {
    let (ra, rb) = (rank_a.as_f64(), rank_b.as_f64());
    RankSimComponents {
        pearson: conf_a.zip(conf_b).map(|(a, b)| pearson_or_fallback(a, b)),
        // permutations never have zero variance, so these always exist
        spearman: stats::spearman(&ra, &rb).unwrap_or(0.0),
        kendall: stats::kendall_tau(&ra, &rb).unwrap_or(0.0),
    }
}

/// Mean of Pearson (on confidences), Spearman and Kendall tau (on ranks).
pub fn rank_label_sim(
    rank_a: &RankVector,
    rank_b: &RankVector,
    conf_a: Option<&[f64; 5]>,
    conf_b: Option<&[f64; 5]>,
) -> f64 {
    rank_label_components(rank_a, rank_b, conf_a, conf_b).mean()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(s: &str) -> LabelVector {
        LabelVector::parse(s).unwrap()
    }

    #[test]
    fn bin_examples() {
        assert_eq!(bin_label_sim(&lv("11111"), &lv("11111")), 1.0);
        assert_eq!(bin_label_sim(&lv("11111"), &lv("00000")), 0.0);
        assert!((bin_label_sim(&lv("11010"), &lv("01101")) - 0.4).abs() < 1e-15);
    }

    #[test]
    fn rank_identity_and_reversal() {
        let id = RankVector::identity();
        let conf = [0.9, 0.7, 0.5, 0.3, 0.1];
        assert!((rank_label_sim(&id, &id, Some(&conf), Some(&conf)) - 1.0).abs() < 1e-12);
        let rev = RankVector::new([5, 4, 3, 2, 1]).unwrap();
        let rconf = [0.1, 0.3, 0.5, 0.7, 0.9];
        assert!((rank_label_sim(&id, &rev, Some(&conf), Some(&rconf)) + 1.0).abs() < 1e-12);
    }

    #[test]
    fn constant_confidence_fallback() {
        let id = RankVector::identity();
        let flat = [0.5; 5];
        let c = rank_label_components(&id, &id, Some(&flat), Some(&flat));
        assert_eq!(c.pearson, Some(1.0));
        let c = rank_label_components(&id, &id, Some(&flat), Some(&[0.4; 5]));
        assert_eq!(c.pearson, Some(0.0));
        let c = rank_label_components(&id, &id, None, Some(&flat));
        assert_eq!(c.pearson, None);
        assert_eq!(c.mean(), 1.0);
    }
}
