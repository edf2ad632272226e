use chrono::{Datelike, NaiveDate};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PostingStats {
    pub iat_days: Vec<i64>,
    /// `(days, share of inter-arrival times >= days)` for each distinct value.
    pub ccdf: Vec<(i64, f64)>,
    pub month_end_fraction: f64,
}

impl PostingStats {
    /// Share of inter-arrival times of at least `days`.
    pub fn ccdf_at(&self, days: i64) -> f64 {
        if self.iat_days.is_empty() {
            return 0.0;
        }
        self.iat_days.iter().filter(|x| **x >= days).count() as f64 / self.iat_days.len() as f64
    }
}

/// Gaps in days between consecutive posts, in date order.
pub fn inter_arrival_days(dates: &[NaiveDate]) -> Result<Vec<i64>> {
    if dates.len() < 2 {
        return Err(Error::Invalid(format!(
            "inter-arrival times need at least 2 dated posts, got {}",
            dates.len()
        )));
    }
    let mut sorted = dates.to_vec();
    sorted.sort();
    Ok(sorted.windows(2).map(|w| (w[1] - w[0]).num_days()).collect())
}

/// First two and last two days of a month.
pub fn is_month_end(d: NaiveDate) -> bool {
    let next_month = if d.month() == 12 {
        NaiveDate::from_ymd_opt(d.year() + 1, 1, 1)
    } else {
        NaiveDate::from_ymd_opt(d.year(), d.month() + 1, 1)
    };
    let last = next_month.and_then(|n| n.pred_opt()).map_or(31, |l| l.day());
    d.day() <= 2 || d.day() + 1 >= last
}

pub fn month_end_fraction(dates: &[NaiveDate]) -> Result<f64> {
    if dates.is_empty() {
        return Err(Error::Invalid("no dated posts".into()));
    }
    Ok(dates.iter().filter(|d| is_month_end(**d)).count() as f64 / dates.len() as f64)
}

pub fn posting_stats(dates: &[NaiveDate]) -> Result<PostingStats> {
    let iat = inter_arrival_days(dates)?;
    let mut distinct = iat.clone();
    distinct.sort_unstable();
    distinct.dedup();
    let n = iat.len() as f64;
    let ccdf = distinct
        .into_iter()
        .map(|v| (v, iat.iter().filter(|x| **x >= v).count() as f64 / n))
        .collect();
    Ok(PostingStats {
        iat_days: iat,
        ccdf,
        month_end_fraction: month_end_fraction(dates)?,
    })
}
