//! Ingestion: URL classification, paragraph extraction, timestamps, posting
//! statistics and the JSONL corpus format.

mod html;
mod record;
mod stats;
mod timestamp;
mod url_rules;

pub use html::{extract_text, Extracted};
pub use record::{ascii_ratio, read_corpus, record_id, write_corpus, CrawlRecord, SourceMeta};
pub use stats::{inter_arrival_days, is_month_end, month_end_fraction, posting_stats, PostingStats};
pub use timestamp::{day_of, parse_timestamp, DateRange};
pub use url_rules::{classify_url, UrlClass, EXCLUSION_KEYWORDS, INCLUSION_KEYWORDS};
