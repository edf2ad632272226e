use brandgauge_core::text::count_syllables;

const ORACLE: &str = include_str!("data/syllables.tsv");

#[test]
fn agrees_with_dictionary_on_at_least_90_of_100() {
    let rows: Vec<(&str, usize)> = ORACLE
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (w, n) = l.split_once('\t').unwrap();
            (w, n.trim().parse().unwrap())
        })
        .collect();
    assert_eq!(rows.len(), 100);
    let misses: Vec<_> = rows
        .iter()
        .filter(|(w, n)| count_syllables(w).unwrap() != *n)
        .collect();
    println!("syllable disagreements: {misses:?}");
    assert!(misses.len() <= 10, "{} disagreements", misses.len());
}
