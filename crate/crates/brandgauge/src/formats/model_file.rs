use std::collections::BTreeMap;

use brandgauge_core::classify::{Calibration, Standardization, TrainMeta, TraitId, TraitModel};
use brandgauge_core::features::{BlockMask, SchemaHash};

use super::{fmt_f64, fmt_f64s};
use crate::{Error, Result};

const HEADER: &str = "brandgauge-trait-model 1";

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "none".into(), |v| v.to_string())
}

/// Line-oriented `key value` text; arrays are space-separated on one line
/// after their length.
pub fn write_model_file(m: &TraitModel) -> String {
    let mut out = String::new();
    let mut kv = |k: &str, v: String| {
        out.push_str(k);
        out.push(' ');
        out.push_str(&v);
        out.push('\n');
    };
    kv("format", HEADER.into());
    kv("trait", m.trait_id.name().into());
    kv("layout_id", m.layout_id.clone());
    kv("schema_hash", m.schema_hash.0.clone());
    kv("block_mask", m.block_mask.to_names());
    kv("bias", fmt_f64(m.bias));
    kv("calibration.a", fmt_f64(m.calibration.a));
    kv("calibration.b", fmt_f64(m.calibration.b));
    kv("meta.seed", m.meta.seed.to_string());
    kv("meta.epochs", m.meta.epochs.to_string());
    kv("meta.c", fmt_f64(m.meta.c));
    kv("meta.n_train", m.meta.n_train.to_string());
    kv("meta.n_calibration", m.meta.n_calibration.to_string());
    kv("meta.n_synthetic", m.meta.n_synthetic.to_string());
    kv("meta.cv_folds", opt(m.meta.cv_folds));
    kv("meta.cv_f1", opt(m.meta.cv_f1.map(fmt_f64)));
    kv("weights", format!("{} {}", m.weights.len(), fmt_f64s(&m.weights)));
    kv("mean", format!("{} {}", m.standardization.mean.len(), fmt_f64s(&m.standardization.mean)));
    kv("scale", format!("{} {}", m.standardization.scale.len(), fmt_f64s(&m.standardization.scale)));
    out
}

pub(crate) struct Fields<'a> {
    label: &'a str,
    map: BTreeMap<&'a str, (usize, &'a str)>,
}

impl<'a> Fields<'a> {
    pub(crate) fn get(&self, key: &str) -> Result<(usize, &'a str)> {
        self.map
            .get(key)
            .copied()
            .ok_or_else(|| Error::format(self.label, 0, format!("missing key {key:?}")))
    }

    pub(crate) fn parse<T: std::str::FromStr>(&self, key: &str) -> Result<T>
    where
        T::Err: std::fmt::Display,
    {
        let (line, v) = self.get(key)?;
        v.trim().parse().map_err(|e| Error::format(self.label, line, format!("{key}: {e}")))
    }

    pub(crate) fn parse_opt<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::fmt::Display,
    {
        let (line, v) = self.get(key)?;
        match v.trim() {
            "none" => Ok(None),
            s => s.parse().map(Some).map_err(|e| Error::format(self.label, line, format!("{key}: {e}"))),
        }
    }

    pub(crate) fn floats(&self, key: &str) -> Result<Vec<f64>> {
        let (line, v) = self.get(key)?;
        let mut parts = v.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::format(self.label, line, format!("{key}: missing length")))?;
        let vals = parts
            .map(|s| s.parse::<f64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|e| Error::format(self.label, line, format!("{key}: {e}")))?;
        if vals.len() != n {
            return Err(Error::format(self.label, line, format!("{key}: expected {n} values, found {}", vals.len())));
        }
        if vals.iter().any(|v| !v.is_finite()) {
            return Err(Error::format(self.label, line, format!("{key}: non-finite value")));
        }
        Ok(vals)
    }
}

pub(crate) fn key_values<'a>(label: &'a str, input: &'a str) -> Result<Fields<'a>> {
    let mut map = BTreeMap::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once(' ').unwrap_or((line, ""));
        if map.insert(k, (i + 1, v)).is_some() {
            return Err(Error::format(label, i + 1, format!("duplicate key {k:?}")));
        }
    }
    Ok(Fields { label, map })
}

pub fn parse_model_file(label: &str, input: &str) -> Result<TraitModel> {
    let f = key_values(label, input)?;
    let (line, format) = f.get("format")?;
    if format != HEADER {
        return Err(Error::format(label, line, format!("unsupported format {format:?}")));
    }
    let (line, name) = f.get("trait")?;
    let trait_id = TraitId::from_name(name).ok_or_else(|| Error::format(label, line, format!("unknown trait {name:?}")))?;
    let (line, mask) = f.get("block_mask")?;
    let block_mask = BlockMask::parse(mask).map_err(|e| Error::format(label, line, e.to_string()))?;
    let weights = f.floats("weights")?;
    let mean = f.floats("mean")?;
    let scale = f.floats("scale")?;
    if mean.len() != weights.len() || scale.len() != weights.len() {
        return Err(Error::format(label, 0, "weights, mean and scale lengths differ"));
    }
    Ok(TraitModel {
        trait_id,
        weights,
        bias: f.parse("bias")?,
        standardization: Standardization { mean, scale },
        calibration: Calibration { a: f.parse("calibration.a")?, b: f.parse("calibration.b")? },
        block_mask,
        layout_id: f.get("layout_id")?.1.into(),
        schema_hash: SchemaHash(f.get("schema_hash")?.1.into()),
        meta: TrainMeta {
            seed: f.parse("meta.seed")?,
            epochs: f.parse("meta.epochs")?,
            c: f.parse("meta.c")?,
            n_train: f.parse("meta.n_train")?,
            n_calibration: f.parse("meta.n_calibration")?,
            n_synthetic: f.parse("meta.n_synthetic")?,
            cv_folds: f.parse_opt("meta.cv_folds")?,
            cv_f1: f.parse_opt("meta.cv_f1")?,
        },
    })
}
