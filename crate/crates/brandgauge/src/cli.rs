//! Command-line interface.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use brandgauge_core::classify::{high_fidelity_filter, LabelVector, RankVector, TraitAssessment};
use brandgauge_core::consistency::{brand_cons_score, compare, representative_vectors, temporal_consistency, StaticPost};
use brandgauge_core::eval::{evaluate_rankings, ArticleRanking, MetricRow, METRIC_NAMES};
use brandgauge_core::ranker::Method;
use chrono::NaiveDate;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::corpus::{
    ascii_ratio, classify_url, day_of, extract_text, parse_timestamp, posting_stats, month_end_fraction, record_id,
    CrawlRecord, SourceMeta, UrlClass,
};
use crate::engine::{Engine, RankRequest, Target};
use crate::formats::{
    load_bundle, read_entities, read_gold, read_jsonl, read_profiles, read_text, save_bundle, to_jsonl, write_profiles,
    write_text, AssessmentRecord, Config, RankingRecord, TrainingRecord, CONFIG_ENV,
};
use crate::{Error, Result};

#[derive(Debug, Parser)]
#[command(name = "brandgauge", version, about = "Brand-personality scoring, consistency and sentence ranking")]
pub struct Cli {
    /// Key/value config file.
    #[arg(long, global = true, env = CONFIG_ENV)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build a corpus JSONL from saved markup listed in a manifest.
    Ingest(IngestArgs),
    /// Train the five trait models and write a bundle.
    Train(TrainArgs),
    /// Score corpus records into assessment JSONL.
    Score(ScoreArgs),
    /// Derive company profiles from scored static pages.
    Profile(ProfileArgs),
    /// Compare scored dynamic pages with company profiles.
    Consistency(ConsistencyArgs),
    /// Rank an article's sentences for rewriting.
    Rank(RankArgs),
    /// Evaluate rankings against GOLD annotations.
    Eval(EvalArgs),
    /// Posting statistics per company.
    Stats(StatsArgs),
    /// Start the HTTP service.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    /// TSV lines `url<TAB>company<TAB>markup path`; paths are relative to the manifest.
    #[arg(long)]
    pub manifest: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Keep excluded pages in the output.
    #[arg(long)]
    pub keep_excluded: bool,
}

#[derive(Debug, Args)]
pub struct TrainArgs {
    /// Training JSONL: `{text, labels: {trait: bool | rating}, aliases?, company?, id?}`.
    #[arg(long)]
    pub examples: PathBuf,
    /// Bundle directory to write.
    #[arg(long)]
    pub out: PathBuf,
    /// Cross-validation folds; 0 skips cross-validation.
    #[arg(long)]
    pub folds: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ScoreArgs {
    #[arg(long)]
    pub bundle: PathBuf,
    #[arg(long)]
    pub corpus: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProfileArgs {
    #[arg(long)]
    pub assessments: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Only use static pages whose top confidence clears the high-fidelity threshold.
    #[arg(long)]
    pub high_fidelity: bool,
}

#[derive(Debug, Args)]
pub struct ConsistencyArgs {
    #[arg(long)]
    pub assessments: PathBuf,
    #[arg(long)]
    pub profiles: PathBuf,
    /// Restrict to one company.
    #[arg(long)]
    pub company: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RankArgs {
    #[arg(long)]
    pub bundle: PathBuf,
    /// Plain-text article.
    #[arg(long)]
    pub article: PathBuf,
    /// Article id; defaults to the file stem.
    #[arg(long)]
    pub id: Option<String>,
    /// Profiles file holding the target company.
    #[arg(long, requires = "company")]
    pub profile: Option<PathBuf>,
    #[arg(long, requires = "profile", conflicts_with = "label")]
    pub company: Option<String>,
    /// Explicit target label bits, e.g. 10100.
    #[arg(long, required_unless_present = "company")]
    pub label: Option<String>,
    /// Explicit target rank permutation, e.g. 1,3,2,5,4.
    #[arg(long, requires = "label")]
    pub rank: Option<String>,
    #[arg(long, default_value = "masr3")]
    pub method: String,
    #[arg(long, default_value_t = 3)]
    pub k: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Central entities, one per line.
    #[arg(long)]
    pub entities: Option<PathBuf>,
    /// Company aliases, comma-separated.
    #[arg(long, value_delimiter = ',')]
    pub aliases: Option<Vec<String>>,
    /// Append the ranking to this JSONL file instead of printing it.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub gold: PathBuf,
    #[arg(long)]
    pub rankings: PathBuf,
    /// Method the p-values are computed against.
    #[arg(long, default_value = "masr3")]
    pub reference: String,
    /// Also write the rows as JSON.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StatsArgs {
    #[arg(long)]
    pub corpus: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long)]
    pub bundle: PathBuf,
    #[arg(long)]
    pub profiles: Option<PathBuf>,
    #[arg(long)]
    pub entities: Option<PathBuf>,
    #[arg(long, default_value = "127.0.0.1:8080")]
    pub addr: String,
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => write_text(p, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Error::io("<stdout>", e))
        }
    }
}

fn json_pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report serializes");
    s.push('\n');
    s
}

pub fn run(cli: Cli) -> Result<()> {
    let config = Config::resolve(cli.config.as_deref())?;
    match cli.command {
        Command::Ingest(a) => ingest(&config, a),
        Command::Train(a) => train(config, a),
        Command::Score(a) => score(config, a),
        Command::Profile(a) => profile(&config, a),
        Command::Consistency(a) => consistency(&config, a),
        Command::Rank(a) => rank(config, a),
        Command::Eval(a) => eval(a),
        Command::Stats(a) => stats(a),
        Command::Serve(a) => serve(config, a),
    }
}

fn ingest(config: &Config, a: IngestArgs) -> Result<()> {
    let label = a.manifest.display().to_string();
    let base = a.manifest.parent().unwrap_or(Path::new("."));
    let mut records = Vec::new();
    let mut excluded = 0;
    for (i, line) in read_text(&a.manifest)?.lines().enumerate() {
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').map(str::trim).collect();
        let [url, company, markup_path] = fields[..] else {
            return Err(Error::format(&label, i + 1, "expected url<TAB>company<TAB>markup path"));
        };
        let class = classify_url(url).map_err(|e| Error::format(&label, i + 1, e.to_string()))?;
        if class.is_excluded() {
            excluded += 1;
            if !a.keep_excluded {
                continue;
            }
        }
        let markup = read_text(&base.join(markup_path))?;
        let extracted = extract_text(&markup);
        records.push(CrawlRecord {
            id: record_id(url),
            url: url.into(),
            company: company.into(),
            class,
            timestamp: parse_timestamp(&markup, &config.date_range),
            source_meta: SourceMeta { extraction_warning: extracted.warning, ascii_ratio: ascii_ratio(&extracted.text) },
            text: extracted.text,
        });
    }
    eprintln!("ingested {} records ({excluded} excluded URLs)", records.len());
    emit(a.out.as_deref(), &to_jsonl(&records))
}

fn train(mut config: Config, a: TrainArgs) -> Result<()> {
    if let Some(seed) = a.seed {
        config.train.seed = seed;
    }
    let folds = a.folds.unwrap_or(config.folds);
    let records: Vec<TrainingRecord> = read_jsonl(&a.examples)?;
    let trained = crate::training::train(&records, &config, folds)?;
    let version = save_bundle(&a.out, &trained.extractor, &trained.models, config.label_threshold)?;
    let mut table = String::from("trait\tprecision\trecall\tf1\n");
    for r in &trained.cv {
        table.push_str(&format!("{}\t{:.4}\t{:.4}\t{:.4}\n", r.trait_id, r.mean.precision, r.mean.recall, r.mean.f1));
    }
    if !trained.cv.is_empty() {
        write_text(&a.out.join("cv.json"), &json_pretty(&trained.cv))?;
        emit(None, &table)?;
    }
    eprintln!("wrote bundle {} (version {version})", a.out.display());
    Ok(())
}

fn class_name(c: &UrlClass) -> &'static str {
    match c {
        UrlClass::Static(_) => "static",
        UrlClass::Dynamic(_) => "dynamic",
        UrlClass::Excluded(_) => "excluded",
    }
}

fn score(config: Config, a: ScoreArgs) -> Result<()> {
    let bundle = load_bundle(&a.bundle)?;
    let engine = Engine::new(config, bundle, BTreeMap::new(), Vec::new())?;
    let corpus: Vec<CrawlRecord> = read_jsonl(&a.corpus)?;
    let mut out = Vec::new();
    let mut skipped = 0;
    for r in &corpus {
        if r.text.trim().is_empty() {
            skipped += 1;
            continue;
        }
        let assessment = engine.assess(&r.text, std::slice::from_ref(&r.company))?;
        out.push(AssessmentRecord {
            id: r.id.clone(),
            company: r.company.clone(),
            url: Some(r.url.clone()),
            page_type: class_name(&r.class).into(),
            timestamp: r.timestamp,
            confidences: assessment.confidences,
            label_vector: assessment.label_vector,
            rank_vector: assessment.rank_vector,
        });
    }
    if skipped > 0 {
        eprintln!("skipped {skipped} records without text");
    }
    emit(a.out.as_deref(), &to_jsonl(&out))
}

fn by_company(records: Vec<AssessmentRecord>, page_type: &str) -> BTreeMap<String, Vec<AssessmentRecord>> {
    let mut out: BTreeMap<String, Vec<AssessmentRecord>> = BTreeMap::new();
    for r in records.into_iter().filter(|r| r.page_type == page_type) {
        out.entry(r.company.clone()).or_default().push(r);
    }
    out
}

fn profile(config: &Config, a: ProfileArgs) -> Result<()> {
    let records: Vec<AssessmentRecord> = read_jsonl(&a.assessments)?;
    let mut profiles = Vec::new();
    for (company, posts) in by_company(records, "static") {
        let mut items: Vec<(Option<NaiveDate>, TraitAssessment)> =
            posts.iter().map(|r| (r.timestamp, r.assessment())).collect();
        if a.high_fidelity {
            items = high_fidelity_filter(items, config.high_fidelity)?;
        }
        if items.is_empty() {
            eprintln!("{company}: no static pages left after filtering");
            continue;
        }
        let posts: Vec<StaticPost> =
            items.into_iter().map(|(d, assessment)| StaticPost { assessment, date: d.map(day_of) }).collect();
        profiles.push(representative_vectors(&company, &posts)?);
    }
    emit(a.out.as_deref(), &write_profiles(&profiles))
}

#[derive(Debug, Serialize)]
struct PostReport {
    id: String,
    timestamp: Option<NaiveDate>,
    #[serde(flatten)]
    report: brandgauge_core::consistency::ConsistencyReport,
}

#[derive(Debug, Serialize)]
struct CompanyConsistency {
    company: String,
    posts: usize,
    brand_cons_scr: f64,
    reports: Vec<PostReport>,
    bins: Vec<brandgauge_core::consistency::TemporalBin>,
}

fn consistency(config: &Config, a: ConsistencyArgs) -> Result<()> {
    let profiles = read_profiles(&a.profiles)?;
    let records: Vec<AssessmentRecord> = read_jsonl(&a.assessments)?;
    let mut out = Vec::new();
    for (company, posts) in by_company(records, "dynamic") {
        if a.company.as_ref().is_some_and(|c| *c != company) {
            continue;
        }
        let Some(profile) = profiles.get(&company) else {
            eprintln!("{company}: no profile, skipped");
            continue;
        };
        let reports: Vec<PostReport> = posts
            .iter()
            .map(|r| PostReport { id: r.id.clone(), timestamp: r.timestamp, report: compare(&r.assessment(), profile, &config.levels) })
            .collect();
        let plain: Vec<_> = reports.iter().map(|r| r.report).collect();
        let dated: Vec<_> = reports.iter().filter_map(|r| r.timestamp.map(|t| (day_of(t), r.report))).collect();
        let bins = if dated.is_empty() { Vec::new() } else { temporal_consistency(&dated, config.bin_weeks)? };
        out.push(CompanyConsistency { company, posts: reports.len(), brand_cons_scr: brand_cons_score(&plain)?, reports, bins });
    }
    if let Some(c) = &a.company {
        if out.is_empty() {
            return Err(Error::UnknownCompany(c.clone()));
        }
    }
    emit(a.out.as_deref(), &json_pretty(&out))
}

/// Builds the same request the HTTP `/v1/rank` endpoint accepts.
pub fn rank_request(a: &RankArgs) -> Result<RankRequest> {
    let text = read_text(&a.article)?;
    let target = match (&a.company, &a.label) {
        (Some(c), _) => Target::company(c.clone()),
        (None, Some(bits)) => Target {
            label_vector: Some(LabelVector::parse(bits)?),
            rank_vector: a.rank.as_deref().map(RankVector::parse).transpose()?,
            ..Default::default()
        },
        (None, None) => return Err(Error::Invalid("give --company or --label".into())),
    };
    let id = a.id.clone().unwrap_or_else(|| {
        a.article.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "article".into())
    });
    Ok(RankRequest {
        article_id: id,
        text,
        target,
        method: Method::parse(&a.method)?,
        k: a.k,
        seed: a.seed,
        central_entities: a.entities.as_deref().map(read_entities).transpose()?,
        central_aliases: a.aliases.clone(),
        sentence_sim: None,
    })
}

fn rank(config: Config, a: RankArgs) -> Result<()> {
    let req = rank_request(&a)?;
    let profiles = match &a.profile {
        Some(p) => read_profiles(p)?,
        None => BTreeMap::new(),
    };
    let engine = Engine::new(config, load_bundle(&a.bundle)?, profiles, Vec::new())?;
    let resp = engine.rank(&req)?;
    let line = to_jsonl(std::slice::from_ref(&resp.ranking));
    match &a.out {
        Some(p) => {
            let mut f = std::fs::OpenOptions::new().create(true).append(true).open(p).map_err(|e| Error::io(p, e))?;
            f.write_all(line.as_bytes()).map_err(|e| Error::io(p, e))
        }
        None => emit(None, &line),
    }
}

/// Tab-separated metric table: one row per method, p-values against the reference.
pub fn metric_table(rows: &[MetricRow]) -> String {
    let mut out = String::from("method\tarticles");
    for m in METRIC_NAMES {
        out.push('\t');
        out.push_str(m);
    }
    for m in METRIC_NAMES {
        out.push_str(&format!("\tp_{m}"));
    }
    out.push('\n');
    for r in rows {
        out.push_str(&format!("{}\t{}", r.method.label(), r.articles));
        for v in r.metrics {
            out.push_str(&format!("\t{v:.4}"));
        }
        for m in METRIC_NAMES {
            match r.p_values.get(m) {
                Some(p) => out.push_str(&format!("\t{p:.3e}")),
                None => out.push_str("\t-"),
            }
        }
        out.push('\n');
    }
    out
}

fn eval(a: EvalArgs) -> Result<()> {
    let golds = read_gold(&a.gold)?;
    let records: Vec<RankingRecord> = read_jsonl(&a.rankings)?;
    let rankings: Vec<ArticleRanking> = records
        .into_iter()
        .map(|r| ArticleRanking {
            article_id: r.article_id,
            method: r.method,
            indices: r.sentences.iter().map(|s| s.index).collect(),
            sentences: r.article_sentences,
        })
        .collect();
    let rows = evaluate_rankings(&rankings, &golds, Method::parse(&a.reference)?)?;
    if let Some(p) = &a.report {
        write_text(p, &json_pretty(&rows))?;
    }
    emit(None, &metric_table(&rows))
}

#[derive(Debug, Serialize)]
struct CompanyStats {
    company: String,
    dated_posts: usize,
    month_end_fraction: Option<f64>,
    /// Absent with fewer than two dated posts.
    posting: Option<crate::corpus::PostingStats>,
}

fn stats(a: StatsArgs) -> Result<()> {
    let corpus: Vec<CrawlRecord> = read_jsonl(&a.corpus)?;
    let mut dates: BTreeMap<String, Vec<NaiveDate>> = BTreeMap::new();
    for r in &corpus {
        let e = dates.entry(r.company.clone()).or_default();
        e.extend(r.timestamp);
    }
    let mut out = Vec::new();
    for (company, d) in dates {
        out.push(CompanyStats {
            dated_posts: d.len(),
            month_end_fraction: month_end_fraction(&d).ok(),
            posting: if d.len() >= 2 { Some(posting_stats(&d)?) } else { None },
            company,
        });
    }
    emit(a.out.as_deref(), &json_pretty(&out))
}

fn serve(config: Config, a: ServeArgs) -> Result<()> {
    let profiles = match &a.profiles {
        Some(p) => read_profiles(p)?,
        None => BTreeMap::new(),
    };
    let entities = match &a.entities {
        Some(p) => read_entities(p)?,
        None => Vec::new(),
    };
    let engine = Arc::new(Engine::new(config, load_bundle(&a.bundle)?, profiles, entities)?);
    eprintln!("bundle version {}", engine.bundle_version());
    let rt = tokio::runtime::Runtime::new().map_err(|e| Error::io("<runtime>", e))?;
    rt.block_on(crate::http::serve(engine, &a.addr)).map_err(|e| Error::io(&a.addr, e))
}
