use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;
use vecq_core::scalar::{Mode, Rational, Scalar};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=50).prop_map(|(p, q)| Rational::new(p, q).unwrap())
}

/// Values near the i64 boundary, so intermediate results overflow the fast path.
fn wide_rational() -> impl Strategy<Value = Rational> {
    prop_oneof![
        small_rational(),
        (any::<i64>(), 1i64..=i64::MAX).prop_map(|(p, q)| Rational::new(p, q).unwrap()),
        (
            i64::MAX - 1000..=i64::MAX,
            prop_oneof![Just(1i64), Just(3), Just(i64::MAX)]
        )
            .prop_map(|(p, q)| Rational::new(p, q).unwrap()),
        (i64::MIN..=i64::MIN + 1000).prop_map(Rational::from_integer),
    ]
}

fn big(r: &Rational) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

fn from_big(r: &BigRational) -> Rational {
    Rational::new(r.numer().clone(), r.denom().clone()).unwrap()
}

proptest! {
    #[test]
    fn field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Rational::zero(), a.clone());
        prop_assert_eq!(&a * &Rational::one(), a.clone());
        prop_assert!((&a + &(-&a)).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip().unwrap(), Rational::one());
        }
    }

    #[test]
    fn arithmetic_matches_bignum(a in wide_rational(), b in wide_rational()) {
        let (x, y) = (big(&a), big(&b));
        prop_assert_eq!(&a + &b, from_big(&(&x + &y)));
        prop_assert_eq!(&a - &b, from_big(&(&x - &y)));
        prop_assert_eq!(&a * &b, from_big(&(&x * &y)));
        prop_assert_eq!(-&a, from_big(&-x.clone()));
        prop_assert_eq!(a.cmp(&b), x.cmp(&y));
        if b.is_zero() {
            prop_assert!(a.checked_div(&b).is_err());
        } else {
            prop_assert_eq!(a.checked_div(&b).unwrap(), from_big(&(&x / &y)));
        }
    }

    #[test]
    fn equal_values_have_one_representation(p in -10_000i64..10_000, q in 1i64..1000, k in 1i64..1000) {
        let a = Rational::new(p, q).unwrap();
        let b = Rational::new(BigInt::from(p) * k, BigInt::from(q) * k).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.to_string(), b.to_string());
        let huge = Rational::new(BigInt::from(p) * BigInt::from(i64::MAX), BigInt::from(q) * BigInt::from(i64::MAX)).unwrap();
        prop_assert_eq!(&a, &huge);
    }

    #[test]
    fn display_round_trips(a in wide_rational()) {
        prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
    }

    #[test]
    fn pow_matches_repeated_product(a in small_rational(), n in 0i32..6) {
        let mut expected = Rational::one();
        for _ in 0..n {
            expected = &expected * &a;
        }
        prop_assert_eq!(a.pow(n).unwrap(), expected.clone());
        if !a.is_zero() {
            prop_assert_eq!(a.pow(-n).unwrap(), expected.recip().unwrap());
        }
    }

    #[test]
    fn exact_sqrt_of_squares(a in small_rational()) {
        prop_assert_eq!((&a * &a).exact_sqrt(), Some(a.abs()));
    }

    #[test]
    fn coercion_is_monotone(a in wide_rational(), b in wide_rational()) {
        let (x, y) = (a.to_f64(), b.to_f64());
        if a < b {
            prop_assert!(x <= y);
        }
        let exact = big(&a);
        let back = BigRational::from_float(x).unwrap();
        let err = (exact - back).abs();
        let bound = BigRational::from_float(1e-12 * x.abs().max(1.0)).unwrap();
        prop_assert!(err <= bound);
    }

    #[test]
    fn mixed_mode_arithmetic_goes_float(a in small_rational(), f in -100.0f64..100.0) {
        let exact = Scalar::exact(a.clone());
        let approx = Scalar::approx(f).unwrap();
        let sum = &exact + &approx;
        prop_assert_eq!(sum.mode(), Mode::Approx);
        prop_assert!((sum.to_f64() - (a.to_f64() + f)).abs() <= 1e-12 * (a.to_f64().abs() + f.abs()).max(1.0));
        prop_assert_eq!((&exact * &exact).mode(), Mode::Exact);
    }

    #[test]
    fn float_sqrt_squares_back(n in 0i64..1_000_000) {
        let root = Scalar::int(n).sqrt().unwrap();
        prop_assert!((&root * &root).approx_eq(&Scalar::int(n), 1e-12));
    }
}

#[test]
fn scalar_error_paths() {
    assert!(Rational::new(1, 0).is_err());
    assert!(Scalar::int(1).checked_div(&Scalar::int(0)).is_err());
    assert!(Scalar::int(-4).sqrt().is_err());
    assert!(Scalar::approx(f64::NAN).is_err());
    assert!(Scalar::approx(f64::INFINITY).is_err());
    assert!(Rational::zero().pow(-1).is_err());
}
