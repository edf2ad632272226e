//! Similarity between trait vectors, consistency levels, company profiles,
//! brand-consistency scores and temporal binning.

mod level;
mod profile;
mod similarity;
mod temporal;

pub use crate::classify::{LabelVector, RankVector};
pub use level::{brand_cons_score, compare, consistency_level, ConsistencyLevel, ConsistencyReport, LevelThresholds};
pub use profile::{representative_vectors, CompanyProfile, StaticPost};
pub use similarity::{bin_label_sim, rank_label_components, rank_label_sim, RankSimComponents};
pub use temporal::{temporal_consistency, TemporalBin};
