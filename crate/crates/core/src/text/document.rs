use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{segment, tokenize, SentenceSpan, Token};
use crate::Day;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StaticKind {
    Introduction,
    About,
    Commitment,
    People,
    Vision,
    Strength,
    History,
    Approach,
    Benefits,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DynamicKind {
    Media,
    Blog,
    News,
    Press,
    Investors,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "page_type", content = "kind")]
pub enum PageType {
    Static(StaticKind),
    Dynamic(DynamicKind),
    Unknown,
}

impl PageType {
    pub fn is_static(&self) -> bool {
        matches!(self, PageType::Static(_))
    }
}

/// A tokenized web article.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub id: String,
    pub company: String,
    pub page_type: PageType,
    pub timestamp: Option<Day>,
    text: String,
    tokens: Vec<Token>,
    sentences: Vec<SentenceSpan>,
}

impl Document {
    pub fn new(id: impl Into<String>, company: impl Into<String>, text: impl Into<String>) -> Self {
        let text = text.into();
        let tokens = tokenize(&text);
        let sentences = segment(&text, &tokens);
        Document {
            id: id.into(),
            company: company.into(),
            page_type: PageType::Unknown,
            timestamp: None,
            text,
            tokens,
            sentences,
        }
    }

    pub fn from_text(id: impl Into<String>, text: impl Into<String>) -> Self {
        Self::new(id, "", text)
    }

    pub fn with_page_type(mut self, page_type: PageType) -> Self {
        self.page_type = page_type;
        self
    }

    pub fn with_timestamp(mut self, day: Option<Day>) -> Self {
        self.timestamp = day;
        self
    }

    pub fn text(&self) -> &str {
        &self.text
    }

    pub fn tokens(&self) -> &[Token] {
        &self.tokens
    }

    pub fn sentences(&self) -> &[SentenceSpan] {
        &self.sentences
    }

    pub fn sentence_text(&self, index: usize) -> &str {
        let s = &self.sentences[index].span;
        &self.text[s.start..s.end]
    }

    pub fn sentence_tokens(&self, index: usize) -> &[Token] {
        let (a, b) = self.sentences[index].tokens;
        &self.tokens[a..b]
    }

    pub fn word_count(&self) -> usize {
        self.tokens.iter().filter(|t| t.is_word).count()
    }
}
