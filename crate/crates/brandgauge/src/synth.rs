//! Seeded synthetic data: labeled training texts, Gaussian blobs and ranking
//! suites whose GOLD sentences are known by construction. Used by the tests,
//! the acceptance suite and the README walkthrough.

use std::collections::BTreeMap;

use brandgauge_core::classify::TraitId;
use brandgauge_core::eval::GoldAnnotation;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::formats::{LabelValue, TrainingRecord};

const TRAIT_WORDS: [&[&str]; 5] = [
    &["honest", "genuine", "family", "caring", "sincere", "friendly", "wholesome", "down-to-earth"],
    &["exciting", "bold", "daring", "trendy", "spirited", "imaginative", "young", "unique"],
    &["reliable", "secure", "successful", "leading", "intelligent", "technical", "efficient", "corporate"],
    &["tough", "outdoor", "rugged", "durable", "western", "sturdy", "adventure", "wilderness"],
    &["elegant", "luxury", "glamorous", "charming", "upscale", "refined", "exclusive", "graceful"],
];

const FRAMES: &[&str] = &[
    "Our {a} team builds {b} products for every customer.",
    "People know the brand as {a} and {b}.",
    "Each season the company shares a {a} story with a {b} twist.",
    "The {a} spirit of the firm shows in its {b} service.",
];

const FILLER: &[&str] = &[
    "The company published its annual report in March.",
    "Offices are located in twelve cities.",
    "The board meets four times a year.",
    "Shipping details are listed on the order page.",
];

/// Labeled texts for all five traits: each record draws each trait
/// independently and mentions that trait's vocabulary when present.
pub fn training_records(n: usize, seed: u64) -> Vec<TrainingRecord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|i| {
            let present: [bool; 5] = std::array::from_fn(|_| rng.random_bool(0.5));
            let mut sentences: Vec<String> = Vec::new();
            for (t, &on) in present.iter().enumerate() {
                if !on {
                    continue;
                }
                for _ in 0..2 {
                    let frame = FRAMES.choose(&mut rng).unwrap();
                    let a = TRAIT_WORDS[t].choose(&mut rng).unwrap();
                    let b = TRAIT_WORDS[t].choose(&mut rng).unwrap();
                    sentences.push(frame.replace("{a}", a).replace("{b}", b));
                }
            }
            sentences.push(FILLER.choose(&mut rng).unwrap().to_string());
            sentences.shuffle(&mut rng);
            let labels: BTreeMap<String, LabelValue> = TraitId::ALL
                .iter()
                .map(|t| (t.name().to_string(), LabelValue::Flag(present[t.index()])))
                .collect();
            TrainingRecord {
                id: Some(format!("t{i:04}")),
                text: sentences.join(" "),
                company: Some("Acme".into()),
                aliases: vec!["Acme".into()],
                labels,
            }
        })
        .collect()
}

/// Two Gaussian blobs with unit variance, centered at `-separation/2` and
/// `+separation/2` on every axis; the first half is negative.
pub fn blobs(n: usize, dim: usize, separation: f64, seed: u64) -> (Vec<Vec<f64>>, Vec<bool>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut points = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for i in 0..n {
        let positive = i >= n / 2;
        let center = if positive { separation / 2.0 } else { -separation / 2.0 };
        points.push(
            (0..dim)
                .map(|_| {
                    let z: f64 = StandardNormal.sample(&mut rng);
                    center + z
                })
                .collect(),
        );
        labels.push(positive);
    }
    (points, labels)
}

/// The company whose central entity the ranking suite mentions.
pub const SUITE_COMPANY: &str = "Acme";

const NEG_CENTRAL: &[&str] = &[
    "Acme shipped a terrible update.",
    "Acme faced an awful lawsuit over the breach.",
    "Customers were angry after Acme failed the audit.",
    "The Acme recall was a painful failure.",
    "Acme reported horrible losses this quarter.",
    "A scandal at Acme caused costly delays.",
];

const NEG_OTHER: &[&str] = &[
    "The storm caused terrible delays across the region.",
    "Rival suppliers struggled with broken parts.",
    "The wider market suffered a painful decline.",
    "Analysts voiced fear about the sector.",
];

const CENTRAL_OTHER: &[&str] = &[
    "Acme opened an office in Denver.",
    "Acme employs nine hundred staff.",
    "The Acme catalog lists four product lines.",
    "Acme was founded in a small garage.",
];

const NEUTRAL: &[&str] = &[
    "The report covers the period from January to June.",
    "Meetings take place on Tuesday mornings.",
    "The building has five floors.",
    "Trains run every ten minutes.",
    "The survey included three regions.",
];

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteArticle {
    pub id: String,
    pub text: String,
    pub sentences: Vec<String>,
    pub gold: GoldAnnotation,
}

/// Articles of 8 to 12 sentences with exactly three negative sentences that
/// mention the company; those three are GOLD. Every article opens with a
/// neutral sentence.
pub fn ranking_suite(n_articles: usize, seed: u64) -> Vec<SuiteArticle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n_articles)
        .map(|a| {
            let len = rng.random_range(8..=12usize);
            let mut body: Vec<(&str, bool)> = Vec::with_capacity(len);
            for s in NEG_CENTRAL.choose_multiple(&mut rng, 3) {
                body.push((s, true));
            }
            let pools = [NEG_OTHER, CENTRAL_OTHER, NEUTRAL];
            while body.len() < len - 1 {
                let pool = pools.choose(&mut rng).unwrap();
                body.push((pool.choose(&mut rng).unwrap(), false));
            }
            body.shuffle(&mut rng);
            body.insert(0, (NEUTRAL.choose(&mut rng).unwrap(), false));
            let gold: Vec<usize> = body.iter().enumerate().filter(|(_, (_, g))| *g).map(|(i, _)| i).collect();
            let sentences: Vec<String> = body.iter().map(|(s, _)| s.to_string()).collect();
            let id = format!("article-{a:02}");
            SuiteArticle {
                text: sentences.join(" "),
                gold: GoldAnnotation { article_id: id.clone(), gold_sentence_indices: gold },
                id,
                sentences,
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use brandgauge_core::lexicon::sentiment_scores;
    use brandgauge_core::ranker::CentralEntitySet;
    use brandgauge_core::resources::demo_sentiment_lexicon;
    use brandgauge_core::text::{tokenize, Document};

    #[test]
    fn suite_sentences_segment_as_built() {
        for art in ranking_suite(20, 7) {
            let doc = Document::from_text(art.id.as_str(), art.text.as_str());
            let got: Vec<&str> = (0..doc.sentences().len()).map(|i| doc.sentence_text(i)).collect();
            assert_eq!(got, art.sentences);
            assert_eq!(art.gold.gold_sentence_indices.len(), 3);
            assert!(!art.gold.gold_sentence_indices.contains(&0));
        }
    }

    #[test]
    fn suite_pools_have_the_intended_aspects() {
        let lex = demo_sentiment_lexicon();
        let central = CentralEntitySet::new([SUITE_COMPANY], [SUITE_COMPANY.to_string()], true);
        let check = |pool: &[&str], neg: bool, ctr: bool| {
            for s in pool {
                let toks = tokenize(s);
                assert_eq!(sentiment_scores(&toks, &lex).unwrap().is_negative(), neg, "{s}");
                assert_eq!(central.mentions(&toks) > 0, ctr, "{s}");
            }
        };
        check(NEG_CENTRAL, true, true);
        check(NEG_OTHER, true, false);
        check(CENTRAL_OTHER, false, true);
        check(NEUTRAL, false, false);
    }

    #[test]
    fn generators_are_seeded() {
        assert_eq!(training_records(10, 3), training_records(10, 3));
        assert_ne!(training_records(10, 3), training_records(10, 4));
        assert_eq!(blobs(20, 3, 4.0, 1), blobs(20, 3, 4.0, 1));
        assert_eq!(ranking_suite(3, 9), ranking_suite(3, 9));
    }
}
