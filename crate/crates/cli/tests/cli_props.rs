use ostro_cli::bfile::BFile;
use ostro_cli::render::{render, Format, RenderSpec, TableJson};
use ostro_cli::verify::{run_suite, Suite, VerifyReport};
use ostro_core::NumerationContext;
use proptest::prelude::*;

fn line() -> impl Strategy<Value = String> {
    prop_oneof!["#[ -~]{0,20}", Just(String::new())]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn bfile_text_round_trips(
        comments in proptest::collection::vec(line(), 0..4),
        start in -5i64..5,
        values in proptest::collection::vec(any::<i64>(), 0..30),
        gap in 1i64..3,
        newline in any::<bool>(),
    ) {
        let mut text: Vec<String> = comments;
        for (k, v) in values.iter().enumerate() {
            text.push(format!("{} {v}", start + gap * k as i64));
        }
        let mut body = text.join("\n");
        if newline && !body.is_empty() {
            body.push('\n');
        }
        let parsed: BFile = body.parse().unwrap();
        prop_assert_eq!(parsed.to_string(), body);
        prop_assert_eq!(parsed.len(), values.len());
    }

    #[test]
    fn json_tables_round_trip(d in 1u32..=5, rows in 0usize..25, left in 0i64..6, cols in 0i64..6, tower in any::<bool>()) {
        let c = NumerationContext::new(d).unwrap();
        let spec = if tower {
            RenderSpec::tower(d, rows, left, cols, Format::Json)
        } else {
            RenderSpec::garden(d, rows, cols, Format::Json)
        };
        let text = render(&c, &spec).unwrap();
        let table: TableJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(serde_json::to_string_pretty(&table).unwrap() + "\n", text);
        prop_assert_eq!(table.rows.len(), rows);
        for r in &table.rows {
            prop_assert_eq!(r.terms.len() as i64, if tower { left + cols } else { cols });
        }
    }

    #[test]
    fn renderings_are_deterministic(d in 2u32..=4, rows in 1usize..30) {
        let c = NumerationContext::new(d).unwrap();
        for format in [Format::Ascii, Format::Csv] {
            let spec = RenderSpec::tower(d, rows, 5, 2, format);
            let fresh = NumerationContext::new(d).unwrap();
            prop_assert_eq!(render(&c, &spec).unwrap(), render(&fresh, &spec).unwrap());
        }
    }
}

#[test]
fn tower_ascii_rows_align() {
    let c = NumerationContext::new(2).unwrap();
    let mut spec = RenderSpec::tower(2, 53, 7, 1, Format::Ascii);
    spec.labels = true;
    let text = render(&c, &spec).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 53);
    let wall = lines[0].find(" | ").unwrap();
    assert!(lines.iter().all(|l| l.find(" | ") == Some(wall)));
    // Each row has exactly one red-wall marker, merged or not.
    assert!(lines.iter().all(|l| l.matches([':', '#']).count() == 1));
}

#[test]
fn verify_report_json_round_trips() {
    let r = run_suite(Suite::Numeration, 1..=3, Some(300)).unwrap();
    let text = serde_json::to_string_pretty(&r).unwrap();
    assert_eq!(serde_json::from_str::<VerifyReport>(&text).unwrap(), r);
    assert!(r.passed);
}
