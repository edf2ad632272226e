//! Per-document feature assembly: category percentages, TF-IDF n-grams,
//! contraction and collocation rates, chains-of-reference counts and
//! readability.

mod chains;
mod extract;
mod rates;
mod tfidf;
mod vector;

pub use chains::{chains_of_reference, ChainCounts};
pub(crate) use chains::{alias_matches, FIRST_PERSON_PLURAL};
pub use extract::{extract_features, FeatureExtractor};
pub use rates::{collocation_rate, contraction_rate};
pub use tfidf::{ngrams, tfidf_fit, tfidf_transform, TfidfConfig, TfidfModel};
pub use vector::{Block, BlockMask, FeatureVector, SchemaHash, BLOCKS};
