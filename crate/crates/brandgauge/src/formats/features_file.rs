use std::collections::BTreeMap;

use brandgauge_core::features::{FeatureExtractor, TfidfConfig, TfidfModel};
use brandgauge_core::lexicon::{load_phrase_list, parse_category_lexicon, PhraseSet};
use brandgauge_core::resources::Stopwords;

use super::fmt_f64;
use super::model_file::key_values;
use crate::{Error, Result};

const HEADER: &str = "brandgauge-features 1";

fn phrases(set: &PhraseSet) -> String {
    set.iter().map(|p| p.join(" ") + "\n").collect()
}

/// Header keys, then `[stopwords]`, `[contractions]`, `[collocations]`,
/// `[tfidf]` (term TAB idf, in column order) and `[categories]` (dictionary
/// text, running to the end of the file).
pub fn write_features_file(fx: &FeatureExtractor) -> String {
    let tfidf = fx.tfidf();
    let mut out = String::new();
    out.push_str(&format!("format {HEADER}\n"));
    out.push_str(&format!("stopwords.id {}\n", fx.stopwords().id));
    out.push_str(&format!("tfidf.max_n {}\n", tfidf.config.max_n));
    out.push_str(&format!("tfidf.min_df {}\n", tfidf.config.min_df));
    out.push_str(&format!(
        "tfidf.max_features {}\n",
        tfidf.config.max_features.map_or_else(|| "none".into(), |m| m.to_string())
    ));
    out.push_str(&format!("tfidf.n_docs {}\n", tfidf.n_docs));
    out.push_str(&format!("contractions.max_n {}\n", fx.contractions().max_n()));
    out.push_str(&format!("collocations.max_n {}\n", fx.collocations().max_n()));
    out.push_str("[stopwords]\n");
    for w in &fx.stopwords().words {
        out.push_str(w);
        out.push('\n');
    }
    out.push_str("[contractions]\n");
    out.push_str(&phrases(fx.contractions()));
    out.push_str("[collocations]\n");
    out.push_str(&phrases(fx.collocations()));
    out.push_str("[tfidf]\n");
    for (term, idf) in tfidf.terms().iter().zip(&tfidf.idf) {
        out.push_str(&format!("{term}\t{}\n", fmt_f64(*idf)));
    }
    out.push_str("[categories]\n");
    out.push_str(&fx.categories().to_dic_string());
    out
}

pub fn parse_features_file(label: &str, input: &str) -> Result<FeatureExtractor> {
    let mut header = String::new();
    let mut sections: BTreeMap<&str, (usize, String)> = BTreeMap::new();
    let mut current: Option<&str> = None;
    for (i, line) in input.lines().enumerate() {
        if current != Some("categories") {
            if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                current = Some(name);
                sections.insert(name, (i + 2, String::new()));
                continue;
            }
        }
        match current {
            None => {
                header.push_str(line);
                header.push('\n');
            }
            Some(name) => {
                let body = &mut sections.get_mut(name).expect("section exists").1;
                body.push_str(line);
                body.push('\n');
            }
        }
    }
    let f = key_values(label, &header)?;
    let (line, format) = f.get("format")?;
    if format != HEADER {
        return Err(Error::format(label, line, format!("unsupported format {format:?}")));
    }
    let section = |name: &str| -> Result<&(usize, String)> {
        sections
            .get(name)
            .ok_or_else(|| Error::format(label, 0, format!("missing section [{name}]")))
    };
    let at = |start: usize, e: brandgauge_core::Error| match e {
        brandgauge_core::Error::Parse { line, message } => Error::format(label, start + line - 1, message),
        other => Error::format(label, start, other.to_string()),
    };

    let stopwords = Stopwords::parse(f.get("stopwords.id")?.1, &section("stopwords")?.1);
    let (s, body) = section("contractions")?;
    let contractions = load_phrase_list(body, f.parse("contractions.max_n")?).map_err(|e| at(*s, e))?;
    let (s, body) = section("collocations")?;
    let collocations = load_phrase_list(body, f.parse("collocations.max_n")?).map_err(|e| at(*s, e))?;
    let (s, body) = section("categories")?;
    let categories = parse_category_lexicon(body).map_err(|e| at(*s, e))?;

    let (s, body) = section("tfidf")?;
    let mut vocabulary = BTreeMap::new();
    let mut idf = Vec::new();
    for (i, line) in body.lines().enumerate() {
        let (term, v) = line
            .split_once('\t')
            .ok_or_else(|| Error::format(label, s + i, "expected term<TAB>idf"))?;
        let v: f64 = v.parse().map_err(|e| Error::format(label, s + i, format!("idf: {e}")))?;
        if !(v > 0.0 && v.is_finite()) {
            return Err(Error::format(label, s + i, "idf must be positive"));
        }
        if vocabulary.insert(term.to_owned(), idf.len()).is_some() {
            return Err(Error::format(label, s + i, format!("duplicate term {term:?}")));
        }
        idf.push(v);
    }
    let tfidf = TfidfModel {
        vocabulary,
        idf,
        config: TfidfConfig {
            min_df: f.parse("tfidf.min_df")?,
            max_features: f.parse_opt("tfidf.max_features")?,
            max_n: f.parse("tfidf.max_n")?,
        },
        stopwords_id: stopwords.id.clone(),
        n_docs: f.parse("tfidf.n_docs")?,
    };
    Ok(FeatureExtractor::new(categories, contractions, collocations, stopwords, tfidf)?)
}
