use std::io::Write;
use std::path::Path;

use brandgauge_core::text::Document;
use chrono::NaiveDate;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::timestamp::day_of;
use super::UrlClass;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize, Default)]
pub struct SourceMeta {
    #[serde(default)]
    pub extraction_warning: bool,
    /// Share of ASCII characters in the text; a crude non-English signal.
    #[serde(default = "one")]
    pub ascii_ratio: f64,
}

fn one() -> f64 {
    1.0
}

/// One ingested web page.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrawlRecord {
    pub id: String,
    pub url: String,
    pub company: String,
    #[serde(flatten)]
    pub class: UrlClass,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timestamp: Option<NaiveDate>,
    pub text: String,
    #[serde(default)]
    pub source_meta: SourceMeta,
}

impl CrawlRecord {
    pub fn to_document(&self) -> Document {
        Document::new(self.id.clone(), self.company.clone(), self.text.clone())
            .with_page_type(self.class.page_type())
            .with_timestamp(self.timestamp.map(day_of))
    }
}

/// Stable identifier derived from the URL.
pub fn record_id(url: &str) -> String {
    let digest = Sha256::digest(url.trim().as_bytes());
    digest[..8].iter().map(|b| format!("{b:02x}")).collect()
}

pub fn ascii_ratio(text: &str) -> f64 {
    let total = text.chars().count();
    if total == 0 {
        return 1.0;
    }
    text.chars().filter(char::is_ascii).count() as f64 / total as f64
}

pub fn read_corpus(path: &Path) -> Result<Vec<CrawlRecord>> {
    crate::formats::read_jsonl(path)
}

pub fn write_corpus(out: &mut impl Write, records: &[CrawlRecord]) -> std::io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut *out, r)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
