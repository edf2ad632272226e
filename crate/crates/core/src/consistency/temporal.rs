use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::level::levels_score;
use super::ConsistencyReport;
use crate::{Day, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TemporalBin {
    pub index: usize,
    pub start: Day,
    pub weeks: u32,
    pub post_count: usize,
    pub brand_cons_scr: f64,
    pub is_consistent: bool,
}

/// Groups dated reports into consecutive `bin_weeks`-long bins starting at
/// the earliest date; empty bins are omitted.
pub fn temporal_consistency(dated: &[(Day, ConsistencyReport)], bin_weeks: u32) -> Result<Vec<TemporalBin>> {
    if bin_weeks == 0 {
        return Err(Error::InvalidConfig("bin_weeks must be at least 1".into()));
    }
    let first = dated
        .iter()
        .map(|(d, _)| *d)
        .min()
        .ok_or(Error::EmptyInput("no dated posts"))?;
    let span = 7 * i64::from(bin_weeks);
    let mut bins: BTreeMap<usize, Vec<_>> = BTreeMap::new();
    for (d, r) in dated {
        bins.entry(((d.0 - first.0) / span) as usize).or_default().push(r.level);
    }
    Ok(bins
        .into_iter()
        .map(|(index, levels)| {
            let score = levels_score(&levels);
            TemporalBin {
                index,
                start: Day(first.0 + index as i64 * span),
                weeks: bin_weeks,
                post_count: levels.len(),
                brand_cons_scr: score,
                is_consistent: score >= 0.5,
            }
        })
        .collect())
}
