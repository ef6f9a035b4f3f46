use proptest::prelude::*;
use vecq_core::expr::{eval_str, parse_source, tokenize};
use vecq_core::scalar::Mode;

fn atom() -> impl Strategy<Value = String> {
    prop_oneof![
        (0u32..50).prop_map(|n| n.to_string()),
        (0u32..50, 0u32..100).prop_map(|(a, b)| format!("{a}.{b}")),
        prop::collection::vec(-9i32..10, 2..=3).prop_map(|v| {
            format!(
                "[{}]",
                v.iter().map(i32::to_string).collect::<Vec<_>>().join(",")
            )
        }),
        Just("I2".to_string()),
        Just("I3".to_string()),
    ]
}

fn source() -> impl Strategy<Value = String> {
    atom().prop_recursive(5, 40, 3, |inner| {
        prop_oneof![
            (
                inner.clone(),
                prop::sample::select(vec!["+", "-", "*", "/", ".", "x"]),
                inner.clone()
            )
                .prop_map(|(l, op, r)| format!("({l}) {op} ({r})")),
            inner.clone().prop_map(|e| format!("-{e}")),
            (inner.clone(), prop::sample::select(vec![-2, -1, 2, 3]))
                .prop_map(|(e, n)| format!("({e})^{n}")),
            (
                prop::sample::select(vec!["det", "inv", "transpose", "normsq", "perp"]),
                inner.clone()
            )
                .prop_map(|(f, e)| format!("{f}({e})")),
            (
                prop::sample::select(vec!["div", "mul", "dot", "cross", "alpha"]),
                inner.clone(),
                inner
            )
                .prop_map(|(f, a, b)| format!("{f}({a}, {b})")),
        ]
    })
}

proptest! {
    #[test]
    fn arbitrary_text_never_panics(s in "\\PC{0,40}") {
        let _ = tokenize(&s);
        let _ = parse_source(&s);
        if let Err(e) = eval_str(&s, Mode::Exact) {
            prop_assert!(e.position() <= s.chars().count());
        }
    }

    #[test]
    fn operator_soup_never_panics(s in "[\\[\\]()0-9,+\\-*/.x^ Iinvdet]{0,30}") {
        let _ = eval_str(&s, Mode::Exact);
        let _ = eval_str(&s, Mode::Approx);
    }

    #[test]
    fn printed_trees_reparse(s in source()) {
        let tree = parse_source(&s).unwrap();
        let printed = tree.to_string();
        prop_assert_eq!(parse_source(&printed).unwrap(), tree);
    }

    #[test]
    fn printing_preserves_values(s in source()) {
        let printed = parse_source(&s).unwrap().to_string();
        let a = eval_str(&s, Mode::Exact).map(|v| v.render(12)).map_err(|e| e.to_string());
        let b = eval_str(&printed, Mode::Exact).map(|v| v.render(12)).map_err(|e| e.to_string());
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if a.is_ok() {
            prop_assert_eq!(a, b);
        }
    }
}

#[test]
fn deep_nesting_is_rejected() {
    let deep = format!("{}1{}", "(".repeat(5000), ")".repeat(5000));
    assert_eq!(
        eval_str(&deep, Mode::Exact).unwrap_err().to_string(),
        "parse error: expression nested too deeply"
    );
    let negs = format!("{}1", "-".repeat(5000));
    assert!(eval_str(&negs, Mode::Exact).is_err());
    let shallow = format!("{}1{}", "(".repeat(190), ")".repeat(190));
    assert_eq!(eval_str(&shallow, Mode::Exact).unwrap().render(12), "1");
}
