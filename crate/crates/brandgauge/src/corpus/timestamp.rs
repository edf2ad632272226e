use std::sync::OnceLock;

use brandgauge_core::Day;
use chrono::NaiveDate;
use regex::Regex;
use serde::{Deserialize, Serialize};

/// Inclusive validity window for extracted dates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DateRange {
    pub min: NaiveDate,
    pub max: NaiveDate,
}

impl Default for DateRange {
    fn default() -> Self {
        DateRange {
            min: NaiveDate::from_ymd_opt(2000, 1, 1).unwrap(),
            max: NaiveDate::from_ymd_opt(2017, 9, 30).unwrap(),
        }
    }
}

impl DateRange {
    pub fn contains(&self, d: NaiveDate) -> bool {
        self.min <= d && d <= self.max
    }
}

const MONTH: &str = r"(jan(?:uary)?|feb(?:ruary)?|mar(?:ch)?|apr(?:il)?|may|june?|july?|aug(?:ust)?|sep(?:t(?:ember)?)?|oct(?:ober)?|nov(?:ember)?|dec(?:ember)?)";

fn patterns() -> &'static [(Regex, [usize; 3]); 3] {
    static P: OnceLock<[(Regex, [usize; 3]); 3]> = OnceLock::new();
    // capture-group positions for (year, month, day)
    P.get_or_init(|| {
        [
            (Regex::new(r"(?:^|[^0-9])(\d{4})-(\d{2})-(\d{2})(?:[^0-9]|$)").unwrap(), [1, 2, 3]),
            (
                Regex::new(&format!(r"(?i)\b{MONTH}\.?\s+(\d{{1,2}})(?:st|nd|rd|th)?,?\s+(\d{{4}})\b")).unwrap(),
                [3, 1, 2],
            ),
            (
                Regex::new(&format!(r"(?i)\b(\d{{1,2}})(?:st|nd|rd|th)?\s+{MONTH}\.?,?\s+(\d{{4}})\b")).unwrap(),
                [3, 2, 1],
            ),
        ]
    })
}

fn month_number(s: &str) -> Option<u32> {
    let key = s.get(..3)?.to_ascii_lowercase();
    ["jan", "feb", "mar", "apr", "may", "jun", "jul", "aug", "sep", "oct", "nov", "dec"]
        .iter()
        .position(|m| *m == key)
        .map(|i| i as u32 + 1)
}

fn part(caps: &regex::Captures<'_>, i: usize) -> Option<u32> {
    let s = caps.get(i)?.as_str();
    s.parse().ok().or_else(|| month_number(s))
}

/// The earliest-positioned valid date in the input that falls inside `range`.
/// ISO dates in meta tags and `datetime` attributes are found the same way as
/// dates in running text.
pub fn parse_timestamp(input: &str, range: &DateRange) -> Option<NaiveDate> {
    let mut found: Vec<(usize, NaiveDate)> = Vec::new();
    for (re, [y, m, d]) in patterns() {
        for caps in re.captures_iter(input) {
            let date = (|| NaiveDate::from_ymd_opt(part(&caps, *y)? as i32, part(&caps, *m)?, part(&caps, *d)?))();
            if let Some(date) = date.filter(|d| range.contains(*d)) {
                found.push((caps.get(0).unwrap().start(), date));
            }
        }
    }
    found.into_iter().min_by_key(|(pos, _)| *pos).map(|(_, d)| d)
}

pub fn day_of(date: NaiveDate) -> Day {
    Day((date - NaiveDate::from_ymd_opt(1970, 1, 1).unwrap()).num_days())
}
