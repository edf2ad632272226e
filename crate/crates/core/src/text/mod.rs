//! Tokenization, sentence segmentation, syllable counting and readability.

mod document;
mod readability;
mod sentence;
mod syllable;
mod tokenize;

pub use document::{Document, DynamicKind, PageType, StaticKind};
pub use readability::{flesch_reading_ease, readability_counts, ReadabilityCounts};
pub use sentence::{segment, split_sentences, SentenceSpan};
pub use syllable::count_syllables;
pub use tokenize::{normalize_token, tokenize, Span, Token};
