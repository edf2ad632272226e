mod common;

use std::fs;

use brandgauge::formats::{RankingRecord, TrainingRecord};
use brandgauge::synth::{ranking_suite, training_records};
use common::{brandgauge, fixture, stderr, stdout};

fn s(p: &std::path::Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn train_is_byte_identical_across_runs() {
    let fx = fixture();
    let train = fx.path("train.jsonl");
    let mut outputs = Vec::new();
    for name in ["b1", "b2"] {
        let out = fx.path(name);
        let o = brandgauge(&["train", "--examples", s(&train), "--out", s(&out), "--folds", "3", "--seed", "5"]);
        assert!(o.status.success(), "{}", stderr(&o));
        outputs.push(stdout(&o));
    }
    assert_eq!(outputs[0], outputs[1]);
    assert!(outputs[0].starts_with("trait\tprecision\trecall\tf1\n"));
    let mut files: Vec<_> = fs::read_dir(fx.path("b1")).unwrap().map(|e| e.unwrap().file_name()).collect();
    files.sort();
    assert_eq!(files.len(), 8, "{files:?}");
    for f in files {
        let a = fs::read(fx.path("b1").join(&f)).unwrap();
        let b = fs::read(fx.path("b2").join(&f)).unwrap();
        assert!(a == b, "{f:?} differs");
    }
}

#[test]
fn train_on_single_class_names_the_trait() {
    let fx = fixture();
    let mut records: Vec<TrainingRecord> = training_records(30, 2);
    for r in &mut records {
        r.labels.insert("ruggedness".into(), brandgauge::formats::LabelValue::Flag(false));
    }
    let path = fx.path("one_class.jsonl");
    fs::write(&path, brandgauge::formats::to_jsonl(&records)).unwrap();
    let o = brandgauge(&["train", "--examples", s(&path), "--out", s(&fx.path("x")), "--folds", "7"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("ruggedness"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(brandgauge(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(brandgauge(&["rank", "--bogus"]).status.code(), Some(2));
    assert_eq!(brandgauge(&[]).status.code(), Some(2));
}

#[test]
fn rank_outputs_are_deterministic() {
    let fx = fixture();
    let article = fx.path("a.txt");
    fs::write(&article, &ranking_suite(1, 4)[0].text).unwrap();
    let (bundle, profiles) = (fx.bundle(), fx.profiles());
    let base = ["rank", "--bundle", s(&bundle), "--article", s(&article), "--profile", s(&profiles), "--company", "Acme"];
    for extra in [&["--method", "masr3"][..], &["--method", "rand3", "--seed", "9"][..], &["--method", "lead3"][..]] {
        let args: Vec<&str> = base.iter().chain(extra).copied().collect();
        let a = brandgauge(&args);
        let b = brandgauge(&args);
        assert!(a.status.success(), "{}", stderr(&a));
        assert_eq!(a.stdout, b.stdout);
        let rec: RankingRecord = serde_json::from_str(stdout(&a).trim()).unwrap();
        assert_eq!(rec.sentences.len(), 3);
        assert_eq!(rec.article_id, "a");
    }
}

#[test]
fn rank_contract_and_errors() {
    let fx = fixture();
    let article = fx.path("a.txt");
    fs::write(&article, &ranking_suite(1, 4)[0].text).unwrap();
    let b = fx.bundle();
    let o = brandgauge(&["rank", "--bundle", s(&b), "--article", s(&article), "--label", "00100", "--method", "masr3", "--k", "3"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let rec: RankingRecord = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(rec.sentences.len(), 3);
    assert!(rec.sentences.iter().all(|r| (1..=6).contains(&r.relevance)));

    let o = brandgauge(&["rank", "--bundle", s(&b), "--article", s(&article), "--label", "00100", "--method", "rand3"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("seed"));
    let o = brandgauge(&["rank", "--bundle", s(&b), "--article", s(&article), "--label", "00100", "--method", "best3"]);
    assert_eq!(o.status.code(), Some(1));
    let o = brandgauge(&["rank", "--bundle", s(&b), "--article", s(&article), "--profile", s(&fx.profiles()), "--company", "Initech"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("Initech"));
}

#[test]
fn eval_prints_metric_table() {
    let fx = fixture();
    let suite = ranking_suite(4, 8);
    let rankings = fx.path("r.jsonl");
    for art in &suite {
        let p = fx.path(&format!("{}.txt", art.id));
        fs::write(&p, &art.text).unwrap();
        for m in ["masr3", "lead3"] {
            let o = brandgauge(&[
                "rank", "--bundle", s(&fx.bundle()), "--article", s(&p), "--profile", s(&fx.profiles()),
                "--company", "Acme", "--method", m, "--out", s(&rankings),
            ]);
            assert!(o.status.success(), "{}", stderr(&o));
        }
    }
    let gold = fx.path("gold.json");
    let golds: Vec<_> = suite.iter().map(|a| a.gold.clone()).collect();
    fs::write(&gold, serde_json::to_string(&golds).unwrap()).unwrap();
    let report = fx.path("report.json");
    let o = brandgauge(&["eval", "--gold", s(&gold), "--rankings", s(&rankings), "--report", s(&report)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let table = stdout(&o);
    let header: Vec<&str> = table.lines().next().unwrap().split('\t').collect();
    for col in ["rouge1", "rouge2", "rougeL", "prec@1", "prec@2", "prec@3"] {
        assert!(header.contains(&col), "{header:?}");
    }
    let masr = table.lines().find(|l| l.starts_with("MASR-3\t")).unwrap();
    assert!(masr.contains("\t1.0000\t1.0000\t1.0000\t1.0000\t1.0000\t1.0000"), "{masr}");
    let rows: serde_json::Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 2);

    fs::write(&gold, serde_json::to_string(&golds[..2]).unwrap()).unwrap();
    let o = brandgauge(&["eval", "--gold", s(&gold), "--rankings", s(&rankings)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains(&suite[2].id) && stderr(&o).contains(&suite[3].id));
}

#[test]
fn corpus_pipeline_from_markup_to_consistency() {
    let fx = fixture();
    let pages = [
        ("https://acme.com/about-us", "<meta name=\"date\" content=\"2015-01-02\"><p>Our reliable and secure team leads the industry.</p><p>We are efficient.</p>"),
        ("https://acme.com/history", "<p>Posted on March 5, 2014</p><p>Acme built a successful, intelligent company.</p>"),
        ("https://acme.com/blog/post-1", "<p>2016-02-01</p><p>Our bold and exciting launch was daring.</p>"),
        ("https://acme.com/news/q3?ref=x", "<p>Published 29 February 2016</p><p>Acme is a reliable leading firm.</p>"),
        ("https://acme.com/careers/job", "<p>Apply now</p>"),
    ];
    let mut manifest = String::new();
    for (i, (url, html)) in pages.iter().enumerate() {
        let name = format!("page{i}.html");
        fs::write(fx.path(&name), html).unwrap();
        manifest.push_str(&format!("{url}\tAcme\t{name}\n"));
    }
    fs::write(fx.path("manifest.tsv"), manifest).unwrap();
    let corpus = fx.path("corpus.jsonl");
    let o = brandgauge(&["ingest", "--manifest", s(&fx.path("manifest.tsv")), "--out", s(&corpus)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let text = fs::read_to_string(&corpus).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.contains("\"page_type\":\"dynamic\",\"kind\":\"blog\""));
    assert!(text.contains("\"timestamp\":\"2014-03-05\""));

    let assessments = fx.path("assess.jsonl");
    let o = brandgauge(&["score", "--bundle", s(&fx.bundle()), "--corpus", s(&corpus), "--out", s(&assessments)]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(fs::read_to_string(&assessments).unwrap().lines().count(), 4);

    let profiles = fx.path("derived.tsv");
    let o = brandgauge(&["profile", "--assessments", s(&assessments), "--out", s(&profiles)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let derived = brandgauge::formats::read_profiles(&profiles).unwrap();
    assert_eq!(derived["Acme"].static_post_count, 2);

    let o = brandgauge(&["consistency", "--assessments", s(&assessments), "--profiles", s(&profiles)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["posts"], 2);
    let score = v[0]["brand_cons_scr"].as_f64().unwrap();
    assert!((0.0..=1.0).contains(&score));

    let o = brandgauge(&["stats", "--corpus", s(&corpus)]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["dated_posts"], 4);
    assert_eq!(v[0]["posting"]["iat_days"].as_array().unwrap().len(), 3);
}

#[test]
fn config_from_environment_is_validated() {
    let fx = fixture();
    let conf = fx.path("bad.conf");
    fs::write(&conf, "label_threshold = 0.5\nshoe_size = 9\n").unwrap();
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_brandgauge"))
        .args(["stats", "--corpus", s(&fx.path("none.jsonl"))])
        .env("BRANDGAUGE_CONFIG", &conf)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("bad.conf:2"), "{}", stderr(&o));
}
