use brandgauge_core::text::{DynamicKind, PageType, StaticKind};
use serde::{Deserialize, Serialize};
use url::Url;

use crate::{Error, Result};

pub const INCLUSION_KEYWORDS: [&str; 18] = [
    "about",
    "about-us",
    "news",
    "press",
    "introduction",
    "strength",
    "investors",
    "history",
    "vision",
    "benefits",
    "commitment",
    "people",
    "why-choose-us",
    "who-we-are",
    "approach",
    "media",
    "blog",
    "social",
];

pub const EXCLUSION_KEYWORDS: [&str; 13] = [
    "job",
    "jcr_content",
    "events",
    "legal",
    "help",
    "showroom",
    "products",
    "store",
    "project",
    "career",
    "policy",
    "disclaimer",
    "report",
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "page_type", content = "kind")]
pub enum UrlClass {
    Static(StaticKind),
    Dynamic(DynamicKind),
    /// Either an exclusion keyword matched, or no inclusion keyword did.
    Excluded(Option<String>),
}

impl UrlClass {
    pub fn page_type(&self) -> PageType {
        match self {
            UrlClass::Static(k) => PageType::Static(*k),
            UrlClass::Dynamic(k) => PageType::Dynamic(*k),
            UrlClass::Excluded(_) => PageType::Unknown,
        }
    }

    pub fn is_excluded(&self) -> bool {
        matches!(self, UrlClass::Excluded(_))
    }
}

fn inclusion_class(segment: &str) -> Option<UrlClass> {
    use DynamicKind as D;
    use StaticKind as S;
    Some(match segment {
        "introduction" => UrlClass::Static(S::Introduction),
        "about" | "about-us" | "who-we-are" | "why-choose-us" => UrlClass::Static(S::About),
        "commitment" => UrlClass::Static(S::Commitment),
        "people" => UrlClass::Static(S::People),
        "vision" => UrlClass::Static(S::Vision),
        "strength" => UrlClass::Static(S::Strength),
        "history" => UrlClass::Static(S::History),
        "approach" => UrlClass::Static(S::Approach),
        "benefits" => UrlClass::Static(S::Benefits),
        "media" => UrlClass::Dynamic(D::Media),
        "blog" => UrlClass::Dynamic(D::Blog),
        "news" => UrlClass::Dynamic(D::News),
        "press" => UrlClass::Dynamic(D::Press),
        "investors" => UrlClass::Dynamic(D::Investors),
        "social" => UrlClass::Dynamic(D::Other),
        _ => return None,
    })
}

fn strip_extension(segment: &str) -> &str {
    for ext in [".html", ".htm", ".aspx", ".php"] {
        if let Some(s) = segment.strip_suffix(ext) {
            return s;
        }
    }
    segment
}

/// Classifies a page by whole-segment keyword matches on its lowercased path.
/// Exclusion keywords win; otherwise the first inclusion segment decides.
pub fn classify_url(raw: &str) -> Result<UrlClass> {
    let url = Url::parse(raw.trim()).map_err(|e| Error::Url { url: raw.into(), reason: e.to_string() })?;
    let segments: Vec<String> = url
        .path_segments()
        .map(|s| s.map(|seg| strip_extension(&seg.to_ascii_lowercase()).to_owned()).collect())
        .unwrap_or_default();
    if let Some(hit) = segments.iter().find(|s| EXCLUSION_KEYWORDS.contains(&s.as_str())) {
        return Ok(UrlClass::Excluded(Some(hit.clone())));
    }
    Ok(segments
        .iter()
        .find_map(|s| inclusion_class(s))
        .unwrap_or(UrlClass::Excluded(None)))
}
