//! Sentence-level aspects, the 1-6 relevance score, the multi-aspect
//! ranker (MASR-3) and its baselines.

mod aspects;
mod entities;
mod methods;

pub use aspects::{article_aspects, relevance_score, sentence_aspects, AspectScores, RankContext, SentenceSim};
pub use entities::{detect_entities, CentralEntitySet};
pub use methods::{baseline_rank, masr3_rank, rank_article, rank_by_aspects, Method, RankedSentence};
