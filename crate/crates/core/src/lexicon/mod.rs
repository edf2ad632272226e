//! Word-category dictionaries, the rule-augmented sentiment lexicon and
//! phrase lists.

mod category;
mod phrase;
mod sentiment;

pub use category::{category_profile, parse_category_lexicon, CategoryLexicon, Pattern};
pub use phrase::{load_phrase_list, PhraseSet};
pub use sentiment::{
    parse_sentiment_lexicon, parse_word_list, sentiment_scores, SentimentLexicon, SentimentRules,
    SentimentScores,
};
