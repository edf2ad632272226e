#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use brandgauge::engine::Engine;
use brandgauge::formats::{load_bundle, save_bundle, to_jsonl, write_profiles, Config};
use brandgauge::synth::{training_records, SUITE_COMPANY};
use brandgauge_core::classify::LabelVector;
use brandgauge_core::consistency::CompanyProfile;
use tempfile::TempDir;

pub struct Fixture {
    pub dir: TempDir,
}

impl Fixture {
    pub fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    pub fn bundle(&self) -> PathBuf {
        self.path("bundle")
    }

    pub fn profiles(&self) -> PathBuf {
        self.path("profiles.tsv")
    }

    pub fn engine(&self) -> Engine {
        let profiles = brandgauge::formats::read_profiles(&self.profiles()).unwrap();
        Engine::new(Config::default(), load_bundle(&self.bundle()).unwrap(), profiles, vec![]).unwrap()
    }
}

pub fn profiles() -> Vec<CompanyProfile> {
    vec![
        CompanyProfile::explicit(SUITE_COMPANY, LabelVector::parse("00100").unwrap(), None, Some([0.2, 0.3, 0.9, 0.1, 0.4])),
        CompanyProfile::explicit("Globex", LabelVector::parse("11000").unwrap(), None, None),
    ]
}

/// A temp dir holding `train.jsonl`, a trained `bundle/` and `profiles.tsv`.
pub fn fixture() -> Fixture {
    let dir = tempfile::tempdir().unwrap();
    let records = training_records(150, 11);
    std::fs::write(dir.path().join("train.jsonl"), to_jsonl(&records)).unwrap();
    let trained = brandgauge::training::train(&records, &Config::default(), 0).unwrap();
    save_bundle(&dir.path().join("bundle"), &trained.extractor, &trained.models, 0.5).unwrap();
    std::fs::write(dir.path().join("profiles.tsv"), write_profiles(&profiles())).unwrap();
    Fixture { dir }
}

pub fn engine_without_profiles(bundle: &Path) -> Engine {
    Engine::new(Config::default(), load_bundle(bundle).unwrap(), BTreeMap::new(), vec![]).unwrap()
}

pub fn brandgauge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brandgauge"))
        .args(args)
        .env_remove("BRANDGAUGE_CONFIG")
        .output()
        .unwrap()
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

pub fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}
