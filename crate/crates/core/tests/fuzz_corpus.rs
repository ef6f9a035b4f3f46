//! Replays the checked-in fuzz seeds through the fuzz target assertions.

use std::fs;
use std::path::PathBuf;

use vecq_core::expr::{eval_str, parse_source, tokenize};
use vecq_core::scalar::{Mode, Rational};

fn seeds(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target);
    let mut paths: Vec<_> = fs::read_dir(&dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .collect();
    paths.sort();
    assert!(!paths.is_empty(), "no seeds in {}", dir.display());
    paths
        .iter()
        .map(|p| String::from_utf8_lossy(&fs::read(p).unwrap()).into_owned())
        .collect()
}

#[test]
fn tokenize_seeds() {
    for s in seeds("tokenize") {
        let len = s.chars().count();
        match tokenize(&s) {
            Ok(tokens) => assert!(tokens.windows(2).all(|p| p[0].position < p[1].position)),
            Err(e) => assert!(e.position() < len, "{s}"),
        }
    }
}

#[test]
fn parse_seeds() {
    for s in seeds("parse") {
        if let Ok(tree) = parse_source(&s) {
            assert_eq!(parse_source(&tree.to_string()).as_ref(), Ok(&tree), "{s}");
        }
    }
}

#[test]
fn eval_seeds() {
    for s in seeds("eval") {
        for mode in [Mode::Exact, Mode::Approx] {
            match eval_str(&s, mode) {
                Ok(v) => assert!(v.is_finite(), "{s}"),
                Err(e) => assert!(e.position() <= s.chars().count(), "{s}"),
            }
        }
    }
}

#[test]
fn rational_seeds() {
    let mut parsed = 0;
    for s in seeds("rational") {
        if let Ok(r) = s.parse::<Rational>() {
            parsed += 1;
            let text = r.to_string();
            assert_eq!(text.parse::<Rational>().as_ref(), Ok(&r), "{s}");
        }
    }
    assert!(parsed >= 5);
}

#[test]
fn i64_extremes() {
    let min: Rational = "-9223372036854775808".parse().unwrap();
    let max: Rational = "9223372036854775807".parse().unwrap();
    assert_eq!((-&min).to_string(), "9223372036854775808");
    assert_eq!(min.abs().to_string(), "9223372036854775808");
    assert_eq!(
        (&min - &Rational::one()).to_string(),
        "-9223372036854775809"
    );
    assert_eq!((&max + &Rational::one()).to_string(), "9223372036854775808");
    assert_eq!(
        (&min * &min).to_string(),
        "85070591730234615865843651857942052864"
    );
    assert_eq!(
        Rational::one().checked_div(&min).unwrap().to_string(),
        "-1/9223372036854775808"
    );
    assert_eq!(min.recip().unwrap().recip().unwrap(), min);
    assert_eq!(Rational::new(i64::MIN, i64::MIN).unwrap(), Rational::one());
    assert_eq!(
        Rational::new(1, i64::MIN).unwrap().to_string(),
        "-1/9223372036854775808"
    );
    assert_eq!(min.pow(2).unwrap(), &min * &min);
}

#[test]
fn oversized_powers_are_rejected() {
    let err = |s: &str| eval_str(s, Mode::Exact).unwrap_err().to_string();
    assert_eq!(err("2^99999999"), "math error: exact result too large");
    assert_eq!(
        err("(7/3)^-2000000000"),
        "math error: exact result too large"
    );
    assert_eq!(
        err("((3^1000)^1000)^1000"),
        "math error: exact result too large"
    );
    assert_eq!(
        err("([3,-1] * [2,5])^2000000000"),
        "math error: exact result too large"
    );
    assert_eq!(
        eval_str("1^2000000000", Mode::Exact).unwrap().render(12),
        "1"
    );
    assert_eq!(
        eval_str("(-1)^2000000001", Mode::Exact).unwrap().render(12),
        "-1"
    );
    assert_eq!(
        eval_str("I3^2000000000", Mode::Exact).unwrap().render(12),
        "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]"
    );
    assert_eq!(
        eval_str("2^60000", Mode::Exact).unwrap().render(12).len(),
        18062
    );
    assert_eq!(
        eval_str("([3,-1] / [2,5])^2000000000", Mode::Approx)
            .unwrap()
            .render(3),
        "[[0.000, 0.000], [0.000, 0.000]]"
    );
}
