//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

mod common;

use vecq_core::algebra::{divide, inverse, multiply, Wedge};
use vecq_core::oracle::{brute_force_law_check, float_pairs, RotationRoute};
use vecq_core::scalar::{Rational, Scalar};
use vecq_core::vector::{Matrix, SquareMatrix, Vector, Vector2, Vector3};

const TRIALS: usize = 1000;
const SEED: u64 = 0;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(cond: bool, what: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn q(p: i64, d: i64) -> Scalar {
    Scalar::exact(Rational::new(p, d).unwrap())
}

/// Every named law must hold on both dimensions with zero failures.
fn laws_hold(names: &[&str]) -> Outcome {
    for name in names {
        let report = brute_force_law_check(name, SEED, TRIALS).map_err(|e| e.to_string())?;
        check(
            report.trials == TRIALS,
            format!("{name}: ran {} trials", report.trials),
        )?;
        check(report.failures == 0, report.to_string())?;
    }
    Ok(())
}

fn both_dims(laws: &[&str]) -> Vec<String> {
    laws.iter()
        .flat_map(|l| [format!("{l}/2d"), format!("{l}/3d")])
        .collect()
}

fn hold_in_both(laws: &[&str]) -> Outcome {
    let names = both_dims(laws);
    laws_hold(&names.iter().map(String::as_str).collect::<Vec<_>>())
}

fn example_1() -> Outcome {
    let (a, b) = (Vector2::from_ints([3, -1]), Vector2::from_ints([2, 5]));
    let e = divide(&a, &b).map_err(|e| e.to_string())?;
    let expected = Matrix::from_ints([[1, 17], [-17, 1]]).scale(&q(1, 29));
    check(*e.matrix() == expected, format!("E = {}", e.matrix()))?;
    check(e.matrix().mul_vec(&b) == a, "E b != a")
}

fn example_2() -> Outcome {
    let (a, b) = (
        Vector3::from_ints([3, -1, 2]),
        Vector3::from_ints([2, 5, 1]),
    );
    let e = divide(&a, &b).map_err(|e| e.to_string())?;
    let expected = Matrix::from_ints([[3, 17, -1], [-17, 3, -11], [1, 11, 3]]).scale(&q(1, 30));
    check(*e.matrix() == expected, format!("E = {}", e.matrix()))?;
    check(e.matrix().mul_vec(&b) == a, "E b != a")
}

fn examples_3_4() -> Outcome {
    let m2 = multiply(&Vector2::from_ints([3, -1]), &Vector2::from_ints([2, 5]));
    check(
        *m2.matrix() == Matrix::from_ints([[1, 17], [-17, 1]]),
        format!("2D product {}", m2.matrix()),
    )?;
    let m3 = multiply(
        &Vector3::from_ints([3, -1, 2]),
        &Vector3::from_ints([2, 5, 1]),
    );
    let expected = Matrix::from_ints([[3, 17, -1], [-17, 3, -11], [1, 11, 3]]);
    check(
        *m3.matrix() == expected,
        format!("3D product {}", m3.matrix()),
    )?;
    let inv2 = inverse(&Vector2::from_ints([2, 5])).map_err(|e| e.to_string())?;
    check(
        inv2 == Vector::new([q(2, 29), q(5, 29)]),
        format!("inverse {inv2}"),
    )?;
    let inv3 = inverse(&Vector3::from_ints([2, 5, 1])).map_err(|e| e.to_string())?;
    check(
        inv3 == Vector::new([q(1, 15), q(1, 6), q(1, 30)]),
        format!("inverse {inv3}"),
    )
}

fn determinants() -> Outcome {
    hold_in_both(&["determinant"])?;
    let d1 = divide(&Vector2::from_ints([3, -1]), &Vector2::from_ints([2, 5]))
        .unwrap()
        .det();
    check(d1 == q(10, 29), format!("2D det {d1}"))?;
    let d2 = divide(
        &Vector3::from_ints([3, -1, 2]),
        &Vector3::from_ints([2, 5, 1]),
    )
    .unwrap()
    .matrix()
    .det();
    check(d2 == q(7, 150), format!("3D det {d2}"))
}

fn division_properties() -> Outcome {
    hold_in_both(&["D1", "D2", "D4"])?;
    laws_hold(&["D3/2d", "D3-span/3d", "D3-offplane/3d"])?;
    let full = brute_force_law_check("D3-full/3d", SEED, TRIALS).map_err(|e| e.to_string())?;
    check(
        full.failures > 0,
        "full 3D matrix identity unexpectedly held",
    )
}

fn multiplication_properties() -> Outcome {
    hold_in_both(&["M1", "M3", "M4", "M5", "M6", "M2-transpose"])?;
    for dim in ["2d", "3d"] {
        let report = brute_force_law_check(&format!("M2-strict/{dim}"), SEED, TRIALS)
            .map_err(|e| e.to_string())?;
        let cx = report
            .first_counterexample
            .as_ref()
            .ok_or(format!("M2-strict/{dim} has no counterexample"))?;
        if dim == "2d" {
            let inputs: Vec<(&str, &str)> =
                cx.inputs.iter().map(|(n, v)| (*n, v.as_str())).collect();
            check(
                cx.trial == 0 && inputs == [("a", "[3, -1]"), ("b", "[2, 5]")],
                report.to_string(),
            )?;
        }
    }
    Ok(())
}

fn route_agreement_on<const N: usize>() -> Outcome
where
    Vector<N>: RotationRoute<N> + Wedge<N>,
{
    let pairs = float_pairs::<N>(SEED, TRIALS);
    check(pairs.len() == TRIALS, "short pair set")?;
    let mut worst = 0.0f64;
    for (a, b) in &pairs {
        let exact = divide(a, b).map_err(|e| e.to_string())?.into_matrix();
        let route = Vector::<N>::rotation_route(a, b).map_err(|e| e.to_string())?;
        for i in 0..N {
            for j in 0..N {
                worst = worst.max((exact.entry(i, j).to_f64() - route.entry(i, j).to_f64()).abs());
            }
        }
    }
    check(
        worst <= 1e-9,
        format!("{N}D max entry difference {worst:e}"),
    )
}

fn route_agreement() -> Outcome {
    route_agreement_on::<2>()?;
    route_agreement_on::<3>()
}

fn golden_file() -> Outcome {
    let cases = common::golden_cases();
    check(
        cases.len() >= 25,
        format!("only {} golden cases", cases.len()),
    )?;
    let failures: Vec<String> = cases
        .iter()
        .filter_map(|c| common::run_case(c).err())
        .collect();
    check(failures.is_empty(), failures.join("\n"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("worked 2D quotient", example_1),
        ("worked 3D quotient", example_2),
        ("worked products and inverse vectors", examples_3_4),
        ("reconstruction law", || hold_in_both(&["reconstruction"])),
        ("consistency law", || hold_in_both(&["consistency"])),
        ("determinant identities", determinants),
        ("division properties", division_properties),
        ("multiplication properties", multiplication_properties),
        ("Lagrange identity", || hold_in_both(&["lagrange"])),
        ("orientation invariance", || {
            hold_in_both(&["orientation-invariance"])
        }),
        ("rotation route agreement", route_agreement),
        ("CLI golden file", golden_file),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}", i + 1);
                for line in why.lines() {
                    println!("        {line}");
                }
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
