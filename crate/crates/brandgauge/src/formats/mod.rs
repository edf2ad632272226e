//! On-disk formats: JSONL helpers, trait model and feature files, model
//! bundles, company profiles, GOLD annotations, central entities, training
//! examples, ranking records and the key/value config file.

mod bundle;
mod config;
mod features_file;
mod model_file;
mod records;

use std::path::Path;

use serde::de::DeserializeOwned;

pub use bundle::{load_bundle, save_bundle, Bundle};
pub use config::{Config, LexiconPaths, CONFIG_ENV};
pub use features_file::{parse_features_file, write_features_file};
pub use model_file::{parse_model_file, write_model_file};
pub use records::{
    parse_profiles, read_entities, read_gold, read_profiles, write_profiles, AssessmentRecord, LabelValue, RankingRecord,
    TrainingRecord,
};

use crate::{Error, Result};

pub fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::io(path, e))
}

pub fn write_text(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Parses one JSON value per non-blank line, reporting the failing line and field.
pub fn parse_jsonl<T: DeserializeOwned>(label: &str, input: &str) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for (i, line) in input.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let de = &mut serde_json::Deserializer::from_str(line);
        let value = serde_path_to_error::deserialize(de)
            .map_err(|e| Error::format(label, i + 1, format!("{} at {}", e.inner(), e.path())))?;
        out.push(value);
    }
    Ok(out)
}

pub fn read_jsonl<T: DeserializeOwned>(path: &Path) -> Result<Vec<T>> {
    parse_jsonl(&path.display().to_string(), &read_text(path)?)
}

pub fn to_jsonl<T: serde::Serialize>(items: &[T]) -> String {
    let mut out = String::new();
    for item in items {
        out.push_str(&serde_json::to_string(item).expect("records serialize"));
        out.push('\n');
    }
    out
}

/// Shortest round-trip formatting for floats in text formats.
pub(crate) fn fmt_f64(v: f64) -> String {
    format!("{v:?}")
}

pub(crate) fn fmt_f64s(vs: &[f64]) -> String {
    vs.iter().map(|v| fmt_f64(*v)).collect::<Vec<_>>().join(" ")
}
