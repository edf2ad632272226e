use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::tokenize::{tokenize, Span, Token};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SentenceSpan {
    pub index: usize,
    pub span: Span,
    /// `[first, last)` into the document's token list; never empty.
    pub tokens: (usize, usize),
}

/// Abbreviations whose trailing period does not end a sentence.
const ABBREVIATIONS: &[&str] = &[
    "mr.", "mrs.", "ms.", "dr.", "prof.", "sr.", "jr.", "st.", "inc.", "ltd.", "co.", "corp.",
    "llc.", "plc.", "bros.", "vs.", "e.g.", "i.e.", "u.s.", "u.k.", "u.s.a.", "jan.", "feb.",
    "apr.", "jun.", "jul.", "aug.", "sep.", "sept.", "oct.", "nov.", "dec.", "no.", "nos.",
    "approx.", "dept.", "est.", "fig.", "gov.", "mt.", "ave.", "blvd.", "rd.", "gen.", "sen.",
    "rep.", "gov.", "hon.", "rev.",
];

fn is_terminator(t: &Token) -> bool {
    matches!(t.surface.as_str(), "." | "!" | "?")
}

fn is_closer(t: &Token) -> bool {
    matches!(
        t.surface.as_str(),
        "\"" | "'" | ")" | "]" | "\u{201d}" | "\u{2019}"
    )
}

fn adjacent(tokens: &[Token], a: usize, b: usize) -> bool {
    tokens[a].span.end == tokens[b].span.start
}

/// True when the period at `dot` closes an abbreviation such as `Inc.` or `U.S.`.
fn closes_abbreviation(tokens: &[Token], dot: usize) -> bool {
    let mut first = dot;
    while first > 0 && adjacent(tokens, first - 1, first) {
        let prev = &tokens[first - 1];
        if prev.is_word || prev.surface == "." {
            first -= 1;
        } else {
            break;
        }
    }
    if first == dot {
        return false;
    }
    let mut run = String::new();
    for t in &tokens[first..=dot] {
        run.push_str(&t.lower);
    }
    if ABBREVIATIONS.contains(&run.as_str()) {
        return true;
    }
    // single-letter initials: "J. Smith"
    let word = &tokens[dot - 1];
    dot - first == 1 && word.surface.chars().count() == 1 && word.starts_uppercase()
}

fn opens_sentence(t: &Token) -> bool {
    t.surface
        .chars()
        .next()
        .is_some_and(|c| c.is_uppercase() || c.is_ascii_digit())
}

/// Splits text into sentences. See [`segment`].
pub fn split_sentences(text: &str) -> Vec<SentenceSpan> {
    segment(text, &tokenize(text))
}

/// Groups `tokens` (produced by tokenizing `text`) into sentences.
///
/// A sentence ends after `.`, `!` or `?` (plus any directly attached closing
/// quotes or brackets) when whitespace follows and the next token starts with
/// an uppercase letter or digit, unless the period closes a listed
/// abbreviation. A blank line always ends a sentence.
pub fn segment(text: &str, tokens: &[Token]) -> Vec<SentenceSpan> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut i = 0;
    while i < tokens.len() {
        let mut end = i;
        let mut boundary = false;
        if is_terminator(&tokens[i]) {
            while end + 1 < tokens.len()
                && adjacent(tokens, end, end + 1)
                && (is_terminator(&tokens[end + 1]) || is_closer(&tokens[end + 1]))
            {
                end += 1;
            }
            if end + 1 < tokens.len() {
                let gap = &text[tokens[end].span.end..tokens[end + 1].span.start];
                boundary = !gap.is_empty()
                    && opens_sentence(&tokens[end + 1])
                    && !(tokens[i].surface == "." && closes_abbreviation(tokens, i));
            }
        }
        if !boundary && end + 1 < tokens.len() {
            let gap = &text[tokens[end].span.end..tokens[end + 1].span.start];
            boundary = gap.matches('\n').count() >= 2;
        }
        if boundary || end + 1 == tokens.len() {
            out.push(SentenceSpan {
                index: out.len(),
                span: Span {
                    start: tokens[start].span.start,
                    end: tokens[end].span.end,
                },
                tokens: (start, end + 1),
            });
            start = end + 1;
        }
        i = end + 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn texts(text: &str) -> Vec<&str> {
        split_sentences(text)
            .iter()
            .map(|s| &text[s.span.start..s.span.end])
            .collect()
    }

    #[test]
    fn splits_on_terminal_punctuation() {
        assert_eq!(texts("It works. It sells."), ["It works.", "It sells."]);
        assert_eq!(texts("Really?! Yes. 2017 was good"), ["Really?!", "Yes.", "2017 was good"]);
    }

    #[test]
    fn abbreviations_suppress_splits() {
        assert_eq!(split_sentences("Acme Inc. grew fast.").len(), 1);
        assert_eq!(split_sentences("We met Mr. Smith today.").len(), 1);
        assert_eq!(split_sentences("Sales in the U.S. Grew again.").len(), 1);
        assert_eq!(split_sentences("Founded by J. Smith in Ohio.").len(), 1);
    }

    #[test]
    fn lowercase_continuation_does_not_split() {
        assert_eq!(split_sentences("Version 2. then more.").len(), 1);
    }

    #[test]
    fn closing_quotes_stay_with_sentence() {
        assert_eq!(texts("He said \"go.\" Then left."), ["He said \"go.\"", "Then left."]);
    }

    #[test]
    fn blank_line_ends_sentence() {
        assert_eq!(texts("Our Story\n\nWe began in 1990."), ["Our Story", "We began in 1990."]);
    }

    #[test]
    fn empty() {
        assert!(split_sentences("").is_empty());
    }

    #[test]
    fn token_ranges_partition() {
        let text = "One. Two three! Four?";
        let toks = tokenize(text);
        let sents = segment(text, &toks);
        let mut next = 0;
        for (i, s) in sents.iter().enumerate() {
            assert_eq!(s.index, i);
            assert_eq!(s.tokens.0, next);
            assert!(s.tokens.1 > s.tokens.0);
            next = s.tokens.1;
        }
        assert_eq!(next, toks.len());
    }
}
