//! Bundled open demo resources: a 64-category word dictionary, a sentiment
//! lexicon with booster and negator lists, contractions, a 50-entry
//! collocation list and an English stopword list.

use alloc::collections::BTreeSet;
use alloc::string::String;

use crate::lexicon::{
    load_phrase_list, parse_category_lexicon, parse_sentiment_lexicon, parse_word_list,
    CategoryLexicon, PhraseSet, SentimentLexicon, SentimentRules,
};
use crate::Result;

pub const DEMO_DICTIONARY: &str = include_str!("../data/demo.dic");
pub const DEMO_SENTIMENT: &str = include_str!("../data/sentiment.tsv");
pub const DEMO_BOOSTERS: &str = include_str!("../data/boosters.txt");
pub const DEMO_NEGATORS: &str = include_str!("../data/negators.txt");
pub const CONTRACTIONS: &str = include_str!("../data/contractions.txt");
pub const DEMO_COLLOCATIONS: &str = include_str!("../data/collocations.txt");
pub const STOPWORDS: &str = include_str!("../data/stopwords.txt");

/// Identifier of the bundled stopword list; part of every feature schema.
pub const STOPWORDS_ID: &str = "en-179-v1";

/// A stopword list and the identifier recorded in feature schemas.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Stopwords {
    pub id: String,
    pub words: BTreeSet<String>,
}

impl Stopwords {
    pub fn parse(id: &str, input: &str) -> Self {
        Stopwords {
            id: id.into(),
            words: input
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.starts_with('#'))
                .map(crate::text::normalize_token)
                .collect(),
        }
    }

    pub fn bundled() -> Self {
        Self::parse(STOPWORDS_ID, STOPWORDS)
    }

    pub fn contains(&self, word: &str) -> bool {
        self.words.contains(word)
    }
}

pub fn demo_category_lexicon() -> CategoryLexicon {
    parse_category_lexicon(DEMO_DICTIONARY).expect("bundled dictionary parses")
}

/// Assembles a sentiment lexicon from its three text sources.
pub fn build_sentiment_lexicon(
    valence: &str,
    boosters: &str,
    negators: &str,
    rules: SentimentRules,
) -> Result<SentimentLexicon> {
    let mut lex = SentimentLexicon {
        valence: parse_sentiment_lexicon(valence)?,
        rules,
        ..Default::default()
    };
    for (word, scalar) in parse_word_list(boosters)? {
        lex.boosters.insert(word, scalar.unwrap_or(0.293));
    }
    for (word, _) in parse_word_list(negators)? {
        lex.negators.insert(word);
    }
    Ok(lex)
}

pub fn demo_sentiment_lexicon() -> SentimentLexicon {
    build_sentiment_lexicon(
        DEMO_SENTIMENT,
        DEMO_BOOSTERS,
        DEMO_NEGATORS,
        SentimentRules::default(),
    )
    .expect("bundled sentiment lexicon parses")
}

pub fn contractions() -> PhraseSet {
    load_phrase_list(CONTRACTIONS, 1).expect("bundled contractions parse")
}

pub fn demo_collocations() -> PhraseSet {
    load_phrase_list(DEMO_COLLOCATIONS, 3).expect("bundled collocations parse")
}
