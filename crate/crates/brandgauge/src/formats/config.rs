use std::path::{Path, PathBuf};
use std::str::FromStr;

use brandgauge_core::classify::{TraitId, TrainConfig, DEFAULT_HIGH_FIDELITY};
use brandgauge_core::consistency::LevelThresholds;
use brandgauge_core::features::{BlockMask, TfidfConfig};
use brandgauge_core::lexicon::{load_phrase_list, parse_category_lexicon, CategoryLexicon, PhraseSet, SentimentLexicon, SentimentRules};
use brandgauge_core::ranker::SentenceSim;
use brandgauge_core::resources::{self, Stopwords};
use chrono::NaiveDate;

use super::read_text;
use crate::corpus::DateRange;
use crate::{Error, Result};

/// Environment variable naming the config file when no flag is given.
pub const CONFIG_ENV: &str = "BRANDGAUGE_CONFIG";

/// Optional replacements for the bundled lexicons. Relative paths are
/// resolved against the config file's directory.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct LexiconPaths {
    pub categories: Option<PathBuf>,
    pub sentiment: Option<PathBuf>,
    pub boosters: Option<PathBuf>,
    pub negators: Option<PathBuf>,
    pub contractions: Option<PathBuf>,
    pub collocations: Option<PathBuf>,
    pub stopwords: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    pub label_threshold: f64,
    pub high_fidelity: f64,
    pub levels: LevelThresholds,
    pub bin_weeks: u32,
    pub sentiment: SentimentRules,
    pub lexicons: LexiconPaths,
    pub sentence_sim: SentenceSim,
    pub resolve_pronouns: bool,
    pub max_body_bytes: usize,
    pub date_range: DateRange,
    /// Feature blocks used by each trait's model, indexed by trait.
    pub masks: [BlockMask; 5],
    pub train: TrainConfig,
    pub folds: usize,
    pub tfidf: TfidfConfig,
    pub entity_min_freq: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            label_threshold: 0.5,
            high_fidelity: DEFAULT_HIGH_FIDELITY,
            levels: LevelThresholds::default(),
            bin_weeks: 4,
            sentiment: SentimentRules::default(),
            lexicons: LexiconPaths::default(),
            sentence_sim: SentenceSim::default(),
            resolve_pronouns: true,
            max_body_bytes: 1 << 20,
            date_range: DateRange::default(),
            masks: [BlockMask::all(); 5],
            train: TrainConfig::default(),
            folds: 7,
            tfidf: TfidfConfig::default(),
            entity_min_freq: 2,
        }
    }
}

fn value<T: FromStr>(label: &str, line: usize, key: &str, raw: &str) -> Result<T> {
    raw.parse()
        .map_err(|_| Error::format(label, line, format!("invalid value {raw:?} for {key}")))
}

fn flag(label: &str, line: usize, key: &str, raw: &str) -> Result<bool> {
    match raw {
        "true" | "yes" | "on" | "1" => Ok(true),
        "false" | "no" | "off" | "0" => Ok(false),
        _ => Err(Error::format(label, line, format!("invalid boolean {raw:?} for {key}"))),
    }
}

impl Config {
    /// Parses `key = value` lines; `#` starts a comment. Unknown keys are errors.
    pub fn parse(label: &str, input: &str, base_dir: &Path) -> Result<Config> {
        let mut c = Config::default();
        for (i, raw_line) in input.lines().enumerate() {
            let n = i + 1;
            let line = raw_line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, raw)) = line.split_once('=') else {
                return Err(Error::format(label, n, "expected 'key = value'"));
            };
            let (key, raw) = (key.trim(), raw.trim());
            let path = || Some(base_dir.join(raw));
            let date = |raw: &str| {
                NaiveDate::parse_from_str(raw, "%Y-%m-%d")
                    .map_err(|_| Error::format(label, n, format!("invalid date {raw:?} for {key}")))
            };
            match key {
                "label_threshold" => c.label_threshold = value(label, n, key, raw)?,
                "high_fidelity" => c.high_fidelity = value(label, n, key, raw)?,
                "level.strong_bin" => c.levels.strong_bin = value(label, n, key, raw)?,
                "level.strong_rank" => c.levels.strong_rank = value(label, n, key, raw)?,
                "level.not_bin" => c.levels.not_bin = value(label, n, key, raw)?,
                "bin_weeks" => c.bin_weeks = value(label, n, key, raw)?,
                "sentiment.negation_window" => c.sentiment.negation_window = value(label, n, key, raw)?,
                "sentiment.negation_factor" => c.sentiment.negation_factor = value(label, n, key, raw)?,
                "sentiment.booster_window" => c.sentiment.booster_window = value(label, n, key, raw)?,
                "lexicon.categories" => c.lexicons.categories = path(),
                "lexicon.sentiment" => c.lexicons.sentiment = path(),
                "lexicon.boosters" => c.lexicons.boosters = path(),
                "lexicon.negators" => c.lexicons.negators = path(),
                "lexicon.contractions" => c.lexicons.contractions = path(),
                "lexicon.collocations" => c.lexicons.collocations = path(),
                "lexicon.stopwords" => c.lexicons.stopwords = path(),
                "sentence_sim" => {
                    c.sentence_sim = match raw {
                        "hamming_levenshtein" => SentenceSim::HammingLevenshtein,
                        "hamming_only" => SentenceSim::HammingOnly,
                        _ => return Err(Error::format(label, n, format!("unknown sentence_sim {raw:?}"))),
                    }
                }
                "resolve_pronouns" => c.resolve_pronouns = flag(label, n, key, raw)?,
                "max_body_bytes" => c.max_body_bytes = value(label, n, key, raw)?,
                "timestamp.min" => c.date_range.min = date(raw)?,
                "timestamp.max" => c.date_range.max = date(raw)?,
                "train.c" => c.train.c = value(label, n, key, raw)?,
                "train.epochs" => c.train.epochs = value(label, n, key, raw)?,
                "train.seed" => c.train.seed = value(label, n, key, raw)?,
                "train.smote_k" => c.train.smote_k = value(label, n, key, raw)?,
                "train.calibration_fraction" => c.train.calibration_fraction = value(label, n, key, raw)?,
                "train.folds" => c.folds = value(label, n, key, raw)?,
                "tfidf.min_df" => c.tfidf.min_df = value(label, n, key, raw)?,
                "tfidf.max_n" => c.tfidf.max_n = value(label, n, key, raw)?,
                "tfidf.max_features" => {
                    c.tfidf.max_features = if raw == "none" { None } else { Some(value(label, n, key, raw)?) }
                }
                "entity_min_freq" => c.entity_min_freq = value(label, n, key, raw)?,
                _ => match key.strip_prefix("mask.").and_then(TraitId::from_name) {
                    Some(t) => {
                        c.masks[t.index()] = BlockMask::parse(raw)
                            .map_err(|e| Error::format(label, n, format!("{key}: {e}")))?
                    }
                    None => return Err(Error::format(label, n, format!("unknown key {key:?}"))),
                },
            }
        }
        c.validate().map_err(|e| Error::format(label, 0, e.to_string()))?;
        Ok(c)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let base = path.parent().unwrap_or(Path::new("."));
        Config::parse(&path.display().to_string(), &read_text(path)?, base)
    }

    /// Loads the file named by `flag`, else by `BRANDGAUGE_CONFIG`, else defaults.
    pub fn resolve(flag: Option<&Path>) -> Result<Config> {
        match flag {
            Some(p) => Config::load(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => Config::load(Path::new(&p)),
                _ => Ok(Config::default()),
            },
        }
    }

    fn validate(&self) -> Result<()> {
        let unit = |v: f64| v > 0.0 && v < 1.0;
        if !unit(self.label_threshold) || !unit(self.high_fidelity) {
            return Err(Error::Invalid("thresholds must lie strictly between 0 and 1".into()));
        }
        if self.bin_weeks == 0 {
            return Err(Error::Invalid("bin_weeks must be at least 1".into()));
        }
        if self.date_range.min > self.date_range.max {
            return Err(Error::Invalid("timestamp.min is after timestamp.max".into()));
        }
        if self.masks.iter().any(|m| m.is_empty()) {
            return Err(Error::Invalid("a trait mask selects no feature blocks".into()));
        }
        self.train.validate()?;
        Ok(())
    }

    pub fn category_lexicon(&self) -> Result<CategoryLexicon> {
        match &self.lexicons.categories {
            Some(p) => parse_category_lexicon(&read_text(p)?).map_err(|e| lexicon_error(p, e)),
            None => Ok(resources::demo_category_lexicon()),
        }
    }

    pub fn sentiment_lexicon(&self) -> Result<SentimentLexicon> {
        let l = &self.lexicons;
        let text = |p: &Option<PathBuf>, fallback: &'static str| -> Result<String> {
            p.as_deref().map(read_text).unwrap_or_else(|| Ok(fallback.into()))
        };
        let valence = text(&l.sentiment, resources::DEMO_SENTIMENT)?;
        let boosters = text(&l.boosters, resources::DEMO_BOOSTERS)?;
        let negators = text(&l.negators, resources::DEMO_NEGATORS)?;
        Ok(resources::build_sentiment_lexicon(&valence, &boosters, &negators, self.sentiment)?)
    }

    pub fn contractions(&self) -> Result<PhraseSet> {
        phrases(&self.lexicons.contractions, 1, resources::contractions)
    }

    pub fn collocations(&self) -> Result<PhraseSet> {
        phrases(&self.lexicons.collocations, 3, resources::demo_collocations)
    }

    pub fn stopwords(&self) -> Result<Stopwords> {
        match &self.lexicons.stopwords {
            Some(p) => {
                let text = read_text(p)?;
                let stem = p.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
                Ok(Stopwords::parse(&format!("{stem}-{}", short_digest(&text)), &text))
            }
            None => Ok(Stopwords::bundled()),
        }
    }
}

fn lexicon_error(path: &Path, e: brandgauge_core::Error) -> Error {
    match e {
        brandgauge_core::Error::Parse { line, message } => Error::format(path.display(), line, message),
        other => other.into(),
    }
}

fn phrases(path: &Option<PathBuf>, max_n: usize, bundled: fn() -> PhraseSet) -> Result<PhraseSet> {
    match path {
        Some(p) => load_phrase_list(&read_text(p)?, max_n).map_err(|e| lexicon_error(p, e)),
        None => Ok(bundled()),
    }
}

fn short_digest(text: &str) -> String {
    use sha2::{Digest, Sha256};
    Sha256::digest(text.as_bytes())[..4].iter().map(|b| format!("{b:02x}")).collect()
}
