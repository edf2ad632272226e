use std::path::{Path, PathBuf};

use brandgauge_core::classify::{ModelSet, TraitId, TraitModel};
use brandgauge_core::features::FeatureExtractor;
use brandgauge_core::pipeline::Scorer;
use sha2::{Digest, Sha256};

use super::features_file::{parse_features_file, write_features_file};
use super::model_file::{key_values, parse_model_file, write_model_file};
use super::{fmt_f64, read_text, write_text};
use crate::{Error, Result};

const HEADER: &str = "brandgauge-bundle 1";
pub const BUNDLE_FILE: &str = "bundle.txt";
const FEATURES_FILE: &str = "features.txt";

/// A loaded model bundle: the feature extractor and the five trait models.
#[derive(Debug, Clone)]
pub struct Bundle {
    /// Digest of the bundle's files; changes whenever any model changes.
    pub version: String,
    pub scorer: Scorer,
}

fn version_of(parts: &[&str]) -> String {
    let mut h = Sha256::new();
    for p in parts {
        h.update((p.len() as u64).to_le_bytes());
        h.update(p.as_bytes());
    }
    h.finalize()[..6].iter().map(|b| format!("{b:02x}")).collect()
}

fn model_file_name(t: TraitId) -> String {
    format!("{}.model", t.name())
}

/// Writes `bundle.txt`, `features.txt` and one `<trait>.model` per trait into
/// `dir`, returning the bundle version.
pub fn save_bundle(dir: &Path, extractor: &FeatureExtractor, models: &ModelSet, label_threshold: f64) -> Result<String> {
    std::fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let features = write_features_file(extractor);
    let mut index = format!("format {HEADER}\nlabel_threshold {}\nfeatures {FEATURES_FILE}\n", fmt_f64(label_threshold));
    let mut texts = Vec::new();
    for m in models.iter() {
        let name = model_file_name(m.trait_id);
        index.push_str(&format!("model.{} {name}\n", m.trait_id.name()));
        texts.push((name, write_model_file(m)));
    }
    write_text(&dir.join(FEATURES_FILE), &features)?;
    for (name, text) in &texts {
        write_text(&dir.join(name), text)?;
    }
    write_text(&dir.join(BUNDLE_FILE), &index)?;
    let mut parts = vec![index.as_str(), features.as_str()];
    parts.extend(texts.iter().map(|(_, t)| t.as_str()));
    Ok(version_of(&parts))
}

/// Loads a bundle from a directory (or from the path of its `bundle.txt`).
pub fn load_bundle(path: &Path) -> Result<Bundle> {
    let (dir, index_path): (PathBuf, PathBuf) = if path.is_dir() {
        (path.to_path_buf(), path.join(BUNDLE_FILE))
    } else {
        (path.parent().unwrap_or(Path::new(".")).to_path_buf(), path.to_path_buf())
    };
    let label = index_path.display().to_string();
    let index = read_text(&index_path)?;
    let f = key_values(&label, &index)?;
    let (line, format) = f.get("format")?;
    if format != HEADER {
        return Err(Error::format(&label, line, format!("unsupported format {format:?}")));
    }
    let features_path = dir.join(f.get("features")?.1);
    let features = read_text(&features_path)?;
    let extractor = parse_features_file(&features_path.display().to_string(), &features)?;
    let mut parts = vec![index.clone(), features];
    let mut models: Vec<TraitModel> = Vec::new();
    for t in TraitId::ALL {
        let p = dir.join(f.get(&format!("model.{}", t.name()))?.1);
        let text = read_text(&p)?;
        let m = parse_model_file(&p.display().to_string(), &text)?;
        if m.trait_id != t {
            return Err(Error::format(p.display(), 0, format!("expected a {t} model, found {}", m.trait_id)));
        }
        models.push(m);
        parts.push(text);
    }
    let scorer = Scorer::new(extractor, ModelSet::new(models)?, f.parse("label_threshold")?)?;
    let refs: Vec<&str> = parts.iter().map(String::as_str).collect();
    Ok(Bundle { version: version_of(&refs), scorer })
}
