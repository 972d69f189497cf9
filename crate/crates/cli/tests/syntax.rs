use proptest::prelude::*;
use ptorus_cli::syntax::{format_word, parse_word};

fn term() -> impl Strategy<Value = String> {
    let gen = prop_oneof![
        Just("TY".to_string()),
        (1..=4usize).prop_map(|i| format!("T{i}")),
        (1..=4usize).prop_map(|i| format!("H{i}")),
        (1..=4usize, -3i64..=3).prop_map(|(i, a)| format!("H{i}[{a}]")),
    ];
    (gen, prop_oneof![Just(None), (-3i64..=3).prop_filter("nonzero", |p| *p != 0).prop_map(Some)])
        .prop_map(|(g, p)| match p {
            Some(p) => format!("{g}^{p}"),
            None => g,
        })
}

proptest! {
    #[test]
    fn print_then_parse_is_stable(terms in prop::collection::vec(term(), 1..6)) {
        let text = terms.join(" ");
        let parsed = parse_word(&text, 4).unwrap();
        let canonical = format_word(&parsed);
        prop_assert_eq!(parse_word(&canonical, 4).unwrap(), parsed.clone());
        prop_assert_eq!(format_word(&parse_word(&canonical, 4).unwrap()), canonical);
    }

    #[test]
    fn unknown_tokens_report_their_position(prefix in prop::collection::vec(term(), 0..4)) {
        let mut text = prefix.join(" ");
        text.push_str(" Q7");
        let err = parse_word(&text, 4).unwrap_err().to_string();
        let expected = format!("position {}", prefix.len() + 1);
        prop_assert!(err.contains(&expected), "{}", err);
    }
}
