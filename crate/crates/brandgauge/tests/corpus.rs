use brandgauge::corpus::{
    classify_url, extract_text, parse_timestamp, posting_stats, read_corpus, record_id, write_corpus, CrawlRecord,
    DateRange, SourceMeta, UrlClass,
};
use brandgauge_core::text::{DynamicKind, StaticKind};
use chrono::NaiveDate;
use proptest::prelude::*;

fn date(y: i32, m: u32, d: u32) -> NaiveDate {
    NaiveDate::from_ymd_opt(y, m, d).unwrap()
}

#[test]
fn crawl_records_round_trip_through_jsonl() {
    let records = vec![
        CrawlRecord {
            id: record_id("https://x.com/about"),
            url: "https://x.com/about".into(),
            company: "X".into(),
            class: UrlClass::Static(StaticKind::About),
            timestamp: Some(date(2012, 4, 1)),
            text: "About us.\n\nMore.".into(),
            source_meta: SourceMeta { extraction_warning: false, ascii_ratio: 1.0 },
        },
        CrawlRecord {
            id: record_id("https://x.com/social/p"),
            url: "https://x.com/social/p".into(),
            company: "X".into(),
            class: UrlClass::Dynamic(DynamicKind::Other),
            timestamp: None,
            text: "Hi.".into(),
            source_meta: SourceMeta { extraction_warning: true, ascii_ratio: 0.5 },
        },
        CrawlRecord {
            id: record_id("https://x.com/legal"),
            url: "https://x.com/legal".into(),
            company: "X".into(),
            class: UrlClass::Excluded(Some("legal".into())),
            timestamp: None,
            text: String::new(),
            source_meta: SourceMeta::default(),
        },
    ];
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    let mut buf = Vec::new();
    write_corpus(&mut buf, &records).unwrap();
    std::fs::write(&path, &buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    assert!(text.lines().next().unwrap().contains("\"page_type\":\"static\",\"kind\":\"about\""));
    assert_eq!(read_corpus(&path).unwrap(), records);
}

#[test]
fn malformed_corpus_line_reports_line_and_field() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.jsonl");
    std::fs::write(&path, "\n{\"id\":\"a\",\"url\":\"u\",\"company\":\"c\",\"page_type\":\"static\",\"kind\":\"about\",\"text\":7}\n").unwrap();
    let e = read_corpus(&path).unwrap_err().to_string();
    assert!(e.contains(":2:"), "{e}");
}

#[test]
fn timestamp_examples() {
    let r = DateRange::default();
    assert_eq!(parse_timestamp("Posted on March 5, 2014", &r), Some(date(2014, 3, 5)));
    assert_eq!(parse_timestamp("1999-05-01", &r), None);
    assert_eq!(parse_timestamp("no date here", &r), None);
    assert_eq!(parse_timestamp("<meta property=\"article:published_time\" content=\"2016-07-04T10:00\">", &r), Some(date(2016, 7, 4)));
}

#[test]
fn posting_stats_examples() {
    let d = date(2014, 1, 10);
    let s = posting_stats(&[d, d + chrono::Days::new(1), d + chrono::Days::new(31)]).unwrap();
    assert_eq!(s.iat_days, vec![1, 30]);
    let same = posting_stats(&[d, d, d]).unwrap();
    assert_eq!(same.iat_days, vec![0, 0]);
    assert_eq!(same.ccdf_at(1), 0.0);
    assert!(posting_stats(&[d]).is_err());
}

fn segment() -> impl Strategy<Value = String> {
    prop_oneof![
        Just("about".to_string()),
        Just("blog".to_string()),
        Just("career".to_string()),
        Just("history".to_string()),
        Just("social".to_string()),
        "[a-z0-9-]{1,8}",
    ]
}

proptest! {
    #[test]
    fn url_class_ignores_query_and_fragment(
        segs in prop::collection::vec(segment(), 0..5),
        query in "[a-z]{1,5}=[a-z0-9]{0,5}",
        frag in "[a-z]{0,6}",
    ) {
        let base = format!("https://example.com/{}", segs.join("/"));
        let plain = classify_url(&base).unwrap();
        prop_assert_eq!(classify_url(&format!("{base}?{query}")).unwrap(), plain.clone());
        prop_assert_eq!(classify_url(&format!("{base}?{query}#{frag}")).unwrap(), plain);
    }

    #[test]
    fn exclusion_always_wins(
        mut segs in prop::collection::vec(segment(), 0..4),
        pos in 0usize..5,
        kw in prop::sample::select(brandgauge::corpus::EXCLUSION_KEYWORDS.to_vec()),
    ) {
        segs.insert(pos.min(segs.len()), kw.to_string());
        let c = classify_url(&format!("https://example.com/{}", segs.join("/"))).unwrap();
        prop_assert!(c.is_excluded());
    }

    #[test]
    fn extract_is_idempotent_on_plain_paragraph(text in "[A-Za-z0-9 .,!?']{0,80}") {
        let once = extract_text(&format!("<p>{}</p>", html_escape::encode_text(&text))).text;
        let twice = extract_text(&format!("<p>{}</p>", html_escape::encode_text(&once))).text;
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once, text.split_whitespace().collect::<Vec<_>>().join(" "));
    }

    #[test]
    fn extract_never_panics(markup in ".{0,200}") {
        let _ = extract_text(&markup);
    }

    #[test]
    fn ccdf_is_monotone(offsets in prop::collection::vec(0u64..400, 2..30)) {
        let base = date(2005, 1, 1);
        let dates: Vec<NaiveDate> = offsets.iter().map(|o| base + chrono::Days::new(*o)).collect();
        let s = posting_stats(&dates).unwrap();
        prop_assert_eq!(s.ccdf[0].1, 1.0);
        prop_assert!(s.ccdf.windows(2).all(|w| w[0].0 < w[1].0 && w[0].1 >= w[1].1));
        prop_assert!(s.iat_days.iter().all(|d| *d >= 0));
        prop_assert!((0.0..=1.0).contains(&s.month_end_fraction));
    }
}
