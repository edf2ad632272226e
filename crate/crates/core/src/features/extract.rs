use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};

use super::chains::{chains_of_reference, chains_without_aliases};
use super::rates::{collocation_rate, contraction_rate};
use super::tfidf::{tfidf_transform, TfidfModel};
use super::vector::{hex_digest, Block, BlockMask, FeatureVector};
use crate::lexicon::{category_profile, CategoryLexicon, PhraseSet};
use crate::resources::Stopwords;
use crate::text::{flesch_reading_ease, Document};
use crate::{Error, Result};

/// Everything needed to turn a document into a feature vector.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureExtractor {
    categories: CategoryLexicon,
    contractions: PhraseSet,
    collocations: PhraseSet,
    stopwords: Stopwords,
    tfidf: TfidfModel,
    #[serde(skip)]
    layout_id: String,
}

impl FeatureExtractor {
    pub fn new(
        categories: CategoryLexicon,
        contractions: PhraseSet,
        collocations: PhraseSet,
        stopwords: Stopwords,
        tfidf: TfidfModel,
    ) -> Result<Self> {
        if tfidf.stopwords_id != stopwords.id {
            return Err(Error::SchemaMismatch {
                expected: tfidf.stopwords_id.clone(),
                found: stopwords.id.clone(),
            });
        }
        let mut fx = FeatureExtractor {
            categories,
            contractions,
            collocations,
            stopwords,
            tfidf,
            layout_id: String::new(),
        };
        fx.layout_id = fx.compute_layout_id();
        Ok(fx)
    }

    fn compute_layout_id(&self) -> String {
        let mut key = String::new();
        let _ = write!(key, "stopwords={};max_n={};cats=", self.stopwords.id, self.tfidf.config.max_n);
        for (id, name) in self.categories.categories() {
            let _ = write!(key, "{id}:{name},");
        }
        key.push_str(";tfidf=");
        for (term, idf) in self.tfidf.terms().iter().zip(&self.tfidf.idf) {
            let _ = write!(key, "{term}={:016x},", idf.to_bits());
        }
        let _ = write!(key, ";contractions={};collocations={}", self.contractions.len(), self.collocations.len());
        hex_digest(key.as_bytes())
    }

    /// Recomputes derived state after deserialization.
    pub fn rehydrate(mut self) -> Result<Self> {
        if self.tfidf.stopwords_id != self.stopwords.id {
            return Err(Error::SchemaMismatch {
                expected: self.tfidf.stopwords_id.clone(),
                found: self.stopwords.id.clone(),
            });
        }
        self.layout_id = self.compute_layout_id();
        Ok(self)
    }

    pub fn layout_id(&self) -> &str {
        &self.layout_id
    }

    pub fn widths(&self) -> [usize; 6] {
        [self.categories.categories().len(), self.tfidf.len(), 1, 1, 4, 1]
    }

    pub fn dimension(&self) -> usize {
        self.widths().iter().sum()
    }

    pub fn categories(&self) -> &CategoryLexicon {
        &self.categories
    }

    pub fn tfidf(&self) -> &TfidfModel {
        &self.tfidf
    }

    pub fn stopwords(&self) -> &Stopwords {
        &self.stopwords
    }

    pub fn contractions(&self) -> &PhraseSet {
        &self.contractions
    }

    pub fn collocations(&self) -> &PhraseSet {
        &self.collocations
    }

    /// Column names in vector order, for inspection and debugging.
    pub fn column_names(&self) -> Vec<String> {
        let mut names: Vec<String> = self.categories.categories().values().map(|n| alloc::format!("cat:{n}")).collect();
        names.extend(self.tfidf.terms().into_iter().map(|t| alloc::format!("tfidf:{t}")));
        for n in [
            "contraction_rate",
            "collocation_rate",
            "chain:repetition",
            "chain:partial_repetition",
            "chain:coreference",
            "chain:possessive_inferrable",
            "flesch",
        ] {
            names.push(n.into());
        }
        names
    }

    /// Extracts the blocks in `mask`, zero-filling the rest. With no aliases
    /// the alias-based chain counts are zero rather than an error.
    pub fn extract(&self, doc: &Document, aliases: &[String], mask: BlockMask) -> Result<FeatureVector> {
        if mask.is_empty() {
            return Err(Error::NoFeaturesSelected);
        }
        if doc.word_count() == 0 {
            return Err(Error::DegenerateDocument("no word tokens"));
        }
        let widths = self.widths();
        let mut values = Vec::with_capacity(self.dimension());
        let tokens = doc.tokens();
        for block in super::BLOCKS {
            let start = values.len();
            let width = widths[block as usize];
            if !mask.contains(block) {
                values.resize(start + width, 0.0);
                continue;
            }
            match block {
                Block::Category => values.extend(category_profile(tokens, &self.categories)?.into_values()),
                Block::Tfidf => {
                    values.resize(start + width, 0.0);
                    for (c, w) in tfidf_transform(&self.tfidf, tokens, &self.stopwords) {
                        values[start + c] = w;
                    }
                }
                Block::Contractions => values.push(contraction_rate(tokens, &self.contractions)?),
                Block::Collocations => values.push(collocation_rate(tokens, &self.collocations)?),
                Block::Chains => {
                    let counts = if aliases.is_empty() {
                        chains_without_aliases(doc)
                    } else {
                        chains_of_reference(doc, aliases)?
                    };
                    values.extend(counts.as_array().map(|c| c as f64))
                }
                Block::Readability => values.push(flesch_reading_ease(doc)?),
            }
            debug_assert_eq!(values.len(), start + width);
        }
        FeatureVector::assemble(values, widths, mask, self.layout_id.clone())
    }
}

pub fn extract_features(
    doc: &Document,
    extractor: &FeatureExtractor,
    aliases: &[String],
    mask: BlockMask,
) -> Result<FeatureVector> {
    extractor.extract(doc, aliases, mask)
}
