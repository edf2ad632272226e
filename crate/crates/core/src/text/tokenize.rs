use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

/// Byte offsets `[start, end)` into the source text, always on char boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Token {
    pub surface: String,
    /// Lowercased surface with typographic apostrophes folded to `'`.
    pub lower: String,
    pub span: Span,
    /// True when the token contains at least one letter.
    pub is_word: bool,
}

impl Token {
    fn new(text: &str, start: usize, end: usize) -> Self {
        let surface = &text[start..end];
        Token {
            surface: surface.into(),
            lower: normalize_token(surface),
            span: Span { start, end },
            is_word: surface.chars().any(char::is_alphabetic),
        }
    }

    pub fn starts_uppercase(&self) -> bool {
        self.surface.chars().next().is_some_and(char::is_uppercase)
    }
}

/// Lowercases and folds `’` to `'` so lexicon lookups see one apostrophe form.
pub fn normalize_token(s: &str) -> String {
    s.chars()
        .flat_map(char::to_lowercase)
        .map(|c| if c == '\u{2019}' { '\'' } else { c })
        .collect()
}

fn joins(prev: char, c: char, next: char) -> bool {
    match c {
        '\'' | '\u{2019}' | '-' => prev.is_alphanumeric() && next.is_alphanumeric(),
        '.' | ',' => prev.is_ascii_digit() && next.is_ascii_digit(),
        _ => false,
    }
}

/// Splits text into word and punctuation tokens.
///
/// Runs of alphanumerics form one token; an apostrophe or hyphen between two
/// alphanumerics stays inside the token (`we're`, `state-of-the-art`), as does
/// a `.` or `,` between digits. Every other non-space character is a token on
/// its own.
pub fn tokenize(text: &str) -> Vec<Token> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let byte_at = |i: usize| chars.get(i).map_or(text.len(), |&(b, _)| b);
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (start, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if !c.is_alphanumeric() {
            tokens.push(Token::new(text, start, byte_at(i + 1)));
            i += 1;
            continue;
        }
        let mut j = i + 1;
        while j < chars.len() {
            if chars[j].1.is_alphanumeric() {
                j += 1;
            } else if j + 1 < chars.len() && joins(chars[j - 1].1, chars[j].1, chars[j + 1].1) {
                j += 2;
            } else {
                break;
            }
        }
        tokens.push(Token::new(text, start, byte_at(j)));
        i = j;
    }
    tokens
}
