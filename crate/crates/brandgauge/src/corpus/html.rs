/// Paragraph text pulled from markup.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Extracted {
    pub text: String,
    /// Set when the markup needed guesswork: unterminated tags, comments or
    /// script blocks, or a paragraph left open at the end.
    pub warning: bool,
}

const BLOCK_TAGS: &[&str] = &[
    "address", "article", "aside", "blockquote", "body", "dd", "div", "dl", "dt", "fieldset", "figcaption", "figure",
    "footer", "form", "h1", "h2", "h3", "h4", "h5", "h6", "head", "header", "hr", "html", "li", "main", "nav", "ol",
    "pre", "section", "table", "td", "th", "tr", "ul",
];

struct Builder {
    paragraphs: Vec<String>,
    current: Option<String>,
}

impl Builder {
    fn close(&mut self) {
        if let Some(raw) = self.current.take() {
            let decoded = html_escape::decode_html_entities(&raw);
            let text = decoded.split_whitespace().collect::<Vec<_>>().join(" ");
            if !text.is_empty() {
                self.paragraphs.push(text);
            }
        }
    }
}

fn find_ci(haystack_lower: &str, from: usize, needle: &str) -> Option<usize> {
    haystack_lower[from..].find(needle).map(|i| i + from)
}

/// End of a tag starting at `start` (the `<`), honouring quoted attribute values.
fn tag_end(bytes: &[u8], start: usize) -> Option<usize> {
    let mut quote = None;
    for (i, &b) in bytes.iter().enumerate().skip(start + 1) {
        match (quote, b) {
            (Some(q), _) if b == q => quote = None,
            (Some(_), _) => {}
            (None, b'"' | b'\'') => quote = Some(b),
            (None, b'>') => return Some(i),
            _ => {}
        }
    }
    None
}

/// Concatenates the text of all `<p>` elements, tags stripped and entities
/// decoded, separated by blank lines. Never fails; see [`Extracted::warning`].
pub fn extract_text(markup: &str) -> Extracted {
    let lower = markup.to_ascii_lowercase();
    let bytes = markup.as_bytes();
    let mut out = Builder { paragraphs: Vec::new(), current: None };
    let mut warning = false;
    let mut i = 0;
    while i < bytes.len() {
        if bytes[i] != b'<' {
            let next = markup[i..].find('<').map_or(bytes.len(), |n| n + i);
            if let Some(cur) = out.current.as_mut() {
                cur.push_str(&markup[i..next]);
            }
            i = next;
            continue;
        }
        if lower[i..].starts_with("<!--") {
            match find_ci(&lower, i + 4, "-->") {
                Some(end) => i = end + 3,
                None => {
                    warning = true;
                    break;
                }
            }
            continue;
        }
        let closing = bytes.get(i + 1) == Some(&b'/');
        let name_start = i + 1 + usize::from(closing);
        let name_len = bytes[name_start..]
            .iter()
            .take_while(|b| b.is_ascii_alphanumeric())
            .count();
        if name_len == 0 && !lower[i..].starts_with("<!") {
            // a bare '<' in text
            if let Some(cur) = out.current.as_mut() {
                cur.push('<');
            }
            i += 1;
            continue;
        }
        let Some(end) = tag_end(bytes, i) else {
            warning = true;
            break;
        };
        let name = &lower[name_start..name_start + name_len];
        i = end + 1;
        if !closing && (name == "script" || name == "style") {
            match find_ci(&lower, i, &format!("</{name}")) {
                Some(close) => {
                    i = tag_end(bytes, close).map_or(bytes.len(), |e| e + 1);
                }
                None => {
                    warning = true;
                    break;
                }
            }
            continue;
        }
        match name {
            "p" => {
                out.close();
                if !closing {
                    out.current = Some(String::new());
                }
            }
            "br" => {
                if let Some(cur) = out.current.as_mut() {
                    cur.push(' ');
                }
            }
            _ if BLOCK_TAGS.contains(&name) => out.close(),
            _ => {}
        }
    }
    if out.current.is_some() {
        warning = true;
    }
    out.close();
    Extracted { text: out.paragraphs.join("\n\n"), warning }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paragraphs_joined() {
        assert_eq!(extract_text("<p>Hello</p><p>World</p>").text, "Hello\n\nWorld");
        assert_eq!(extract_text("<div>no paragraphs</div>").text, "");
        assert_eq!(extract_text("<p>a &amp; b</p>").text, "a & b");
    }

    #[test]
    fn inline_tags_and_noise() {
        let m = r#"<html><head><style>p{}</style><script>var x="<p>no</p>";</script></head>
            <body><P class="lead">We <b>build</b>
            things.<br>Daily.</P><!-- <p>hidden</p> --><p>  </p><p>Next<div>cut</div></body></html>"#;
        let e = extract_text(m);
        assert_eq!(e.text, "We build things. Daily.\n\nNext");
        assert!(!e.warning);
    }

    #[test]
    fn malformed_is_best_effort() {
        let e = extract_text("<p>open paragraph <b");
        assert!(e.warning);
        assert_eq!(e.text, "open paragraph");
        let e = extract_text("<p>one<p>two");
        assert_eq!(e.text, "one\n\ntwo");
        assert!(e.warning);
        assert!(extract_text("<p>x</p><!-- never closed").warning);
        assert_eq!(extract_text("<p>1 < 2</p>").text, "1 < 2");
    }
}
