//! ROUGE, precision at k and the ranker comparison harness.

mod harness;
mod rouge;

pub use harness::{
    evaluate_rankers, evaluate_rankings, precision_at_k, ArticleCase, ArticleRanking, GoldAnnotation, MetricRow,
    METRIC_NAMES,
};
pub use rouge::{rouge_lcs, rouge_n, rouge_tokens, RougeScore};
