//! Per-trait linear classifiers over feature vectors, calibrated
//! confidences, trait vectors and k-fold evaluation.

mod assess;
mod fidelity;
mod metrics;
mod model;
mod smote;
mod trait_id;
mod vectors;

pub use assess::{assess, ModelSet, TraitAssessment};
pub use fidelity::{high_fidelity_filter, DEFAULT_HIGH_FIDELITY};
pub use metrics::{binary_metrics, cross_validate, BinaryMetrics, CvReport};
pub use model::{
    predict_confidence, train_trait_model, Calibration, LabeledExample, Standardization, TrainConfig,
    TrainMeta, TraitModel,
};
pub use smote::smote;
pub use trait_id::TraitId;
pub use vectors::{LabelVector, RankVector};
