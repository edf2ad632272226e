use alloc::vec::Vec;

use super::TraitAssessment;
use crate::{Error, Result};

pub const DEFAULT_HIGH_FIDELITY: f64 = 0.95;

/// Keeps items whose highest trait confidence reaches `tau`.
pub fn high_fidelity_filter<T>(items: Vec<(T, TraitAssessment)>, tau: f64) -> Result<Vec<(T, TraitAssessment)>> {
    if !(tau > 0.0 && tau < 1.0) {
        return Err(Error::InvalidConfig(alloc::format!("high-fidelity threshold must be in (0, 1), got {tau}")));
    }
    Ok(items.into_iter().filter(|(_, a)| a.max_confidence() >= tau).collect())
}
