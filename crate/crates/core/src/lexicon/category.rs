use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt::Write;

use serde::{Deserialize, Serialize};

use crate::text::Token;
use crate::{Error, Result};

/// A dictionary pattern: an exact word, or a stem matching any word it prefixes
/// (written with a trailing `*`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pattern {
    pub text: String,
    pub wildcard: bool,
}

impl core::fmt::Display for Pattern {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.text)?;
        if self.wildcard {
            f.write_char('*')?;
        }
        Ok(())
    }
}

/// A LIWC-format word-category dictionary.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct CategoryLexicon {
    categories: BTreeMap<u32, String>,
    exact: BTreeMap<String, Vec<u32>>,
    stems: BTreeMap<String, Vec<u32>>,
}

impl CategoryLexicon {
    pub fn categories(&self) -> &BTreeMap<u32, String> {
        &self.categories
    }

    pub fn category_ids(&self) -> impl Iterator<Item = u32> + '_ {
        self.categories.keys().copied()
    }

    pub fn entry_count(&self) -> usize {
        self.exact.len() + self.stems.len()
    }

    pub fn entries(&self) -> impl Iterator<Item = (Pattern, &[u32])> + '_ {
        let exact = self.exact.iter().map(|(p, ids)| {
            (
                Pattern {
                    text: p.clone(),
                    wildcard: false,
                },
                ids.as_slice(),
            )
        });
        let stems = self.stems.iter().map(|(p, ids)| {
            (
                Pattern {
                    text: p.clone(),
                    wildcard: true,
                },
                ids.as_slice(),
            )
        });
        exact.chain(stems)
    }

    /// Category ids matched by a (lowercased) word, sorted and deduplicated.
    pub fn lookup(&self, word: &str) -> Vec<u32> {
        let mut ids: Vec<u32> = self.exact.get(word).cloned().unwrap_or_default();
        for (i, _) in word.char_indices().skip(1).chain(core::iter::once((word.len(), ' '))) {
            if let Some(found) = self.stems.get(&word[..i]) {
                ids.extend_from_slice(found);
            }
        }
        ids.sort_unstable();
        ids.dedup();
        ids
    }

    /// Writes the lexicon back in dictionary-file form: header sorted by id,
    /// entries sorted by pattern.
    pub fn to_dic_string(&self) -> String {
        let mut out = String::from("%\n");
        for (id, name) in &self.categories {
            let _ = writeln!(out, "{id}\t{name}");
        }
        out.push_str("%\n");
        let mut entries: Vec<(Pattern, &[u32])> = self.entries().collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        for (pattern, ids) in entries {
            out.push_str(&pattern.to_string());
            for id in ids {
                let _ = write!(out, "\t{id}");
            }
            out.push('\n');
        }
        out
    }
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses a dictionary file: a header of `<id>\t<name>` lines between two
/// lines holding only `%`, then `<pattern>(\t<id>)+` entries.
///
/// Patterns are lowercased; duplicate patterns merge their category ids.
pub fn parse_category_lexicon(input: &str) -> Result<CategoryLexicon> {
    let mut lex = CategoryLexicon::default();
    let mut lines = input.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end_matches('\r')));

    // skip leading blank lines; a blank file is an empty lexicon
    let first = loop {
        match lines.next() {
            None => return Ok(lex),
            Some((_, l)) if l.trim().is_empty() => continue,
            Some(x) => break x,
        }
    };
    if first.1.trim() != "%" {
        return Err(parse_error(first.0, "expected '%' to open the category header"));
    }
    let mut closed = false;
    for (n, line) in lines.by_ref() {
        let trimmed = line.trim();
        if trimmed == "%" {
            closed = true;
            break;
        }
        if trimmed.is_empty() {
            continue;
        }
        let mut parts = trimmed.split('\t').filter(|p| !p.is_empty());
        let (Some(id), Some(name), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(parse_error(n, "header line must be '<id><TAB><name>'"));
        };
        let id: u32 = id
            .trim()
            .parse()
            .map_err(|_| parse_error(n, alloc::format!("invalid category id {id:?}")))?;
        if lex.categories.insert(id, name.trim().into()).is_some() {
            return Err(parse_error(n, alloc::format!("duplicate category id {id}")));
        }
    }
    if !closed {
        return Err(parse_error(input.lines().count(), "unterminated category header"));
    }
    for (n, line) in lines {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut parts = trimmed.split('\t').map(str::trim).filter(|p| !p.is_empty());
        let raw = parts.next().unwrap_or_default();
        let mut ids = Vec::new();
        for p in parts {
            let id: u32 = p
                .parse()
                .map_err(|_| parse_error(n, alloc::format!("invalid category id {p:?}")))?;
            if !lex.categories.contains_key(&id) {
                return Err(parse_error(n, alloc::format!("unknown category id {id}")));
            }
            ids.push(id);
        }
        if ids.is_empty() {
            return Err(parse_error(n, "entry has no category ids"));
        }
        let pattern = crate::text::normalize_token(raw);
        let (key, wildcard) = match pattern.strip_suffix('*') {
            Some(stem) => (String::from(stem), true),
            None => (pattern, false),
        };
        if key.is_empty() || key.contains('*') {
            return Err(parse_error(n, alloc::format!("invalid pattern {raw:?}")));
        }
        let slot = if wildcard { &mut lex.stems } else { &mut lex.exact };
        let merged = slot.entry(key).or_default();
        merged.extend(ids);
        merged.sort_unstable();
        merged.dedup();
    }
    Ok(lex)
}

/// Percentage of word tokens matching each category. Every category of the
/// lexicon is present in the result, unmatched ones with `0.0`.
pub fn category_profile(tokens: &[Token], lex: &CategoryLexicon) -> Result<BTreeMap<u32, f64>> {
    let mut counts: BTreeMap<u32, usize> = lex.category_ids().map(|id| (id, 0)).collect();
    let mut words = 0usize;
    for t in tokens.iter().filter(|t| t.is_word) {
        words += 1;
        for id in lex.lookup(&t.lower) {
            *counts.entry(id).or_default() += 1;
        }
    }
    if words == 0 {
        return Err(Error::EmptyInput("category profile needs at least one word"));
    }
    Ok(counts
        .into_iter()
        .map(|(id, c)| (id, 100.0 * c as f64 / words as f64))
        .collect())
}
