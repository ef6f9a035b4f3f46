//! Exact rationals and mode-tagged scalars.
//!
//! Every algebraic routine in this crate is written once against [`Scalar`].
//! A scalar is either an exact [`Rational`] or a finite `f64`; binary
//! operations on mixed operands coerce the exact side to floating point.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::MathError;

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator.
///
/// Values whose numerator and denominator fit in an `i64` are kept inline;
/// everything else is held as a [`BigRational`]. The representation is
/// canonical, so derived equality and hashing are by value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational(RatRepr);

/// Largest numerator or denominator, in bits, that powers may produce.
pub const MAX_EXACT_BITS: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum RatRepr {
    /// `denom > 0`, `gcd(|numer|, denom) = 1`, `numer != i64::MIN`.
    Small { numer: i64, denom: i64 },
    /// Never representable as `Small`.
    Big(BigRational),
}

const F64_EXACT_INT: i64 = 1 << 53;

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Result<Self, MathError> {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(MathError::DivisionByZeroScalar);
        }
        Ok(Rational::from_big(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Rational::from_big(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(RatRepr::Small { numer: 0, denom: 1 })
    }

    pub fn one() -> Self {
        Rational(RatRepr::Small { numer: 1, denom: 1 })
    }

    fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(numer), Some(denom)) if numer != i64::MIN => {
                Rational(RatRepr::Small { numer, denom })
            }
            _ => Rational(RatRepr::Big(value)),
        }
    }

    /// Reduces `numer/denom` (with `denom != 0`) computed in `i128`.
    fn from_wide(numer: i128, denom: i128) -> Self {
        let g = numer.gcd(&denom);
        let (mut numer, mut denom) = (numer / g, denom / g);
        if denom < 0 {
            numer = -numer;
            denom = -denom;
        }
        match (i64::try_from(numer), i64::try_from(denom)) {
            (Ok(n), Ok(d)) if n != i64::MIN => Rational(RatRepr::Small { numer: n, denom: d }),
            _ => Rational(RatRepr::Big(BigRational::new_raw(
                numer.into(),
                denom.into(),
            ))),
        }
    }

    /// Bit length of the larger of numerator and denominator.
    pub(crate) fn bits(&self) -> u64 {
        match &self.0 {
            RatRepr::Small { numer, denom } => {
                u64::from(64 - numer.unsigned_abs().max(*denom as u64).leading_zeros())
            }
            RatRepr::Big(b) => b.numer().bits().max(b.denom().bits()),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            RatRepr::Small { numer, denom } => {
                BigRational::new_raw((*numer).into(), (*denom).into())
            }
            RatRepr::Big(b) => b.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            RatRepr::Small { numer, .. } => (*numer).into(),
            RatRepr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            RatRepr::Small { denom, .. } => (*denom).into(),
            RatRepr::Big(b) => b.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self.0, RatRepr::Small { numer: 0, .. })
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            RatRepr::Small { numer, .. } => *numer < 0,
            RatRepr::Big(b) => b.is_negative(),
        }
    }

    pub fn is_integer(&self) -> bool {
        match &self.0 {
            RatRepr::Small { denom, .. } => *denom == 1,
            RatRepr::Big(b) => b.is_integer(),
        }
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational, MathError> {
        if rhs.is_zero() {
            return Err(MathError::DivisionByZeroScalar);
        }
        Ok(match (&self.0, &rhs.0) {
            (RatRepr::Small { numer: a, denom: b }, RatRepr::Small { numer: c, denom: d }) => {
                Rational::from_wide(*a as i128 * *d as i128, *b as i128 * *c as i128)
            }
            _ => Rational::from_big(self.to_big() / rhs.to_big()),
        })
    }

    pub fn recip(&self) -> Result<Rational, MathError> {
        Rational::one().checked_div(self)
    }

    /// Integer power; negative exponents take the reciprocal first.
    ///
    /// Fails with [`MathError::ResultTooLarge`] when the result would need more
    /// than [`MAX_EXACT_BITS`] bits.
    pub fn pow(&self, exp: i32) -> Result<Rational, MathError> {
        let base = if exp < 0 { self.recip()? } else { self.clone() };
        // floor(log2 |p|) * n is a lower bound on the bit length of p^n.
        if (base.bits().saturating_sub(1)).saturating_mul(u64::from(exp.unsigned_abs()))
            > MAX_EXACT_BITS
        {
            return Err(MathError::ResultTooLarge);
        }
        Ok(Rational::from_big(num_traits::pow(
            base.to_big(),
            exp.unsigned_abs() as usize,
        )))
    }

    /// Nearest `f64`. Values beyond the `f64` range saturate to infinity.
    pub fn to_f64(&self) -> f64 {
        if let RatRepr::Small { numer, denom } = self.0 {
            if numer.abs() <= F64_EXACT_INT && denom <= F64_EXACT_INT {
                // both operands exact, so the quotient is correctly rounded
                return numer as f64 / denom as f64;
            }
        }
        self.to_big().to_f64().unwrap_or_else(|| {
            if self.is_negative() {
                f64::NEG_INFINITY
            } else {
                f64::INFINITY
            }
        })
    }

    /// Exact square root when both numerator and denominator are perfect squares.
    pub fn exact_sqrt(&self) -> Option<Rational> {
        if self.is_negative() {
            return None;
        }
        let (numer, denom) = (self.numer(), self.denom());
        let (n, d) = (numer.sqrt(), denom.sqrt());
        if &n * &n == numer && &d * &d == denom {
            Some(Rational::from_big(BigRational::new(n, d)))
        } else {
            None
        }
    }

    /// Exact value of a finite `f64`.
    pub fn from_f64(value: f64) -> Option<Rational> {
        BigRational::from_float(value).map(Rational::from_big)
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Rational) -> Ordering {
        match (&self.0, &other.0) {
            (RatRepr::Small { numer: a, denom: b }, RatRepr::Small { numer: c, denom: d }) => {
                (*a as i128 * *d as i128).cmp(&(*c as i128 * *b as i128))
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Rational) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            RatRepr::Small { numer, denom: 1 } => write!(f, "{numer}"),
            RatRepr::Small { numer, denom } => write!(f, "{numer}/{denom}"),
            RatRepr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            RatRepr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseRationalError {
    #[error("invalid rational literal")]
    Invalid,
    #[error("zero denominator")]
    ZeroDenominator,
}

fn parse_digits(s: &str) -> Result<BigInt, ParseRationalError> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseRationalError::Invalid);
    }
    BigInt::parse_bytes(s.as_bytes(), 10).ok_or(ParseRationalError::Invalid)
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p` or `p/q` with an optional sign on `p`; the result is normalized.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (negative, body) = match s.as_bytes().first() {
            Some(b'-') => (true, &s[1..]),
            Some(b'+') => (false, &s[1..]),
            _ => (false, s),
        };
        let (p, q) = match body.split_once('/') {
            Some((p, q)) => (parse_digits(p)?, parse_digits(q)?),
            None => (parse_digits(body)?, BigInt::one()),
        };
        if q.is_zero() {
            return Err(ParseRationalError::ZeroDenominator);
        }
        let p = if negative { -p } else { p };
        Ok(Rational::from_big(BigRational::new(p, q)))
    }
}

fn small_add(a: i64, b: i64, c: i64, d: i64) -> Rational {
    let (a, b, c, d) = (a as i128, b as i128, c as i128, d as i128);
    if b == d {
        Rational::from_wide(a + c, b)
    } else {
        Rational::from_wide(a * d + c * b, b * d)
    }
}

fn small_mul(a: i64, b: i64, c: i64, d: i64) -> Rational {
    Rational::from_wide(a as i128 * c as i128, b as i128 * d as i128)
}

impl<'a> Add<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn add(self, rhs: &'a Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (RatRepr::Small { numer: a, denom: b }, RatRepr::Small { numer: c, denom: d }) => {
                small_add(*a, *b, *c, *d)
            }
            _ => Rational::from_big(self.to_big() + rhs.to_big()),
        }
    }
}

impl<'a> Sub<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn sub(self, rhs: &'a Rational) -> Rational {
        match (&self.0, &rhs.0) {
            // numer != i64::MIN, so negation cannot overflow
            (RatRepr::Small { numer: a, denom: b }, RatRepr::Small { numer: c, denom: d }) => {
                small_add(*a, *b, -*c, *d)
            }
            _ => Rational::from_big(self.to_big() - rhs.to_big()),
        }
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational {
    type Output = Rational;
    fn mul(self, rhs: &'a Rational) -> Rational {
        match (&self.0, &rhs.0) {
            (RatRepr::Small { numer: a, denom: b }, RatRepr::Small { numer: c, denom: d }) => {
                small_mul(*a, *b, *c, *d)
            }
            _ => Rational::from_big(self.to_big() * rhs.to_big()),
        }
    }
}

macro_rules! rational_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                (&self).$method(&rhs)
            }
        }
    };
}

rational_owned_binop!(Add, add);
rational_owned_binop!(Sub, sub);
rational_owned_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match &self.0 {
            RatRepr::Small { numer, denom } => Rational(RatRepr::Small {
                numer: -numer,
                denom: *denom,
            }),
            RatRepr::Big(b) => Rational::from_big(-b),
        }
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        -&self
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

/// Arithmetic mode of a scalar.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Mode {
    #[default]
    Exact,
    Approx,
}

impl Mode {
    /// Mode of a result combining operands of modes `self` and `other`.
    pub fn join(self, other: Mode) -> Mode {
        if self == Mode::Exact && other == Mode::Exact {
            Mode::Exact
        } else {
            Mode::Approx
        }
    }
}

#[derive(Clone, Debug)]
enum Repr {
    Exact(Rational),
    Approx(f64),
}

/// A number in one of two arithmetic modes.
///
/// Approximate scalars built from external floats must be finite. Arithmetic
/// is total; an overflow to infinity can only come out of `Approx` operands of
/// astronomically large magnitude, and callers that accept such inputs check
/// [`Scalar::is_finite`] on their results.
#[derive(Clone, Debug)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn exact(value: Rational) -> Self {
        Scalar(Repr::Exact(value))
    }

    pub fn approx(value: f64) -> Result<Self, MathError> {
        if value.is_finite() {
            Ok(Scalar(Repr::Approx(value)))
        } else {
            Err(MathError::NonFinite)
        }
    }

    pub fn int(n: i64) -> Self {
        Scalar::exact(Rational::from_integer(n))
    }

    /// `numer/denom` as an exact scalar. Panics when `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Scalar::exact(Rational::new(numer, denom).expect("nonzero denominator"))
    }

    pub fn zero(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::exact(Rational::zero()),
            Mode::Approx => Scalar(Repr::Approx(0.0)),
        }
    }

    pub fn one(mode: Mode) -> Self {
        match mode {
            Mode::Exact => Scalar::exact(Rational::one()),
            Mode::Approx => Scalar(Repr::Approx(1.0)),
        }
    }

    pub fn mode(&self) -> Mode {
        match self.0 {
            Repr::Exact(_) => Mode::Exact,
            Repr::Approx(_) => Mode::Approx,
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match &self.0 {
            Repr::Exact(r) => Some(r),
            Repr::Approx(_) => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        match &self.0 {
            Repr::Exact(r) => r.to_f64(),
            Repr::Approx(v) => *v,
        }
    }

    pub fn to_approx(&self) -> Scalar {
        Scalar(Repr::Approx(self.to_f64()))
    }

    /// Converts to `mode`; approximate values never become exact.
    pub fn coerce(&self, mode: Mode) -> Scalar {
        match mode {
            Mode::Exact => self.clone(),
            Mode::Approx => self.to_approx(),
        }
    }

    pub fn is_finite(&self) -> bool {
        self.to_f64().is_finite() || self.as_rational().is_some()
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Exact(r) => r.is_zero(),
            Repr::Approx(v) => *v == 0.0,
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Exact(r) => r.is_negative(),
            Repr::Approx(v) => *v < 0.0,
        }
    }

    pub fn abs(&self) -> Scalar {
        match &self.0 {
            Repr::Exact(r) => Scalar::exact(r.abs()),
            Repr::Approx(v) => Scalar(Repr::Approx(v.abs())),
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, MathError> {
        if rhs.is_zero() {
            return Err(MathError::DivisionByZeroScalar);
        }
        match (&self.0, &rhs.0) {
            (Repr::Exact(x), Repr::Exact(y)) => Ok(Scalar::exact(x.checked_div(y)?)),
            _ => Ok(Scalar(Repr::Approx(self.to_f64() / rhs.to_f64()))),
        }
    }

    pub fn recip(&self) -> Result<Scalar, MathError> {
        Scalar::one(self.mode()).checked_div(self)
    }

    pub(crate) fn bits(&self) -> u64 {
        self.as_rational().map_or(0, Rational::bits)
    }

    pub fn pow(&self, exp: i32) -> Result<Scalar, MathError> {
        match &self.0 {
            Repr::Exact(r) => Ok(Scalar::exact(r.pow(exp)?)),
            Repr::Approx(v) => {
                if exp < 0 && *v == 0.0 {
                    return Err(MathError::DivisionByZeroScalar);
                }
                Ok(Scalar(Repr::Approx(v.powi(exp))))
            }
        }
    }

    /// Square root. Exact perfect squares stay exact; everything else is
    /// rounded to the nearest `f64` root.
    pub fn sqrt(&self) -> Result<Scalar, MathError> {
        if self.is_negative() {
            return Err(MathError::NegativeSqrt);
        }
        if let Some(root) = self.as_rational().and_then(Rational::exact_sqrt) {
            return Ok(Scalar::exact(root));
        }
        Ok(Scalar(Repr::Approx(self.to_f64().sqrt())))
    }

    /// Equality within `rel_tol`, relative to `max(1, |other|)`.
    pub fn approx_eq(&self, other: &Scalar, rel_tol: f64) -> bool {
        let (x, y) = (self.to_f64(), other.to_f64());
        (x - y).abs() <= rel_tol * y.abs().max(1.0)
    }

    fn zip(
        self,
        rhs: Scalar,
        exact: impl FnOnce(Rational, Rational) -> Rational,
        approx: impl FnOnce(f64, f64) -> f64,
    ) -> Scalar {
        match (self.0, rhs.0) {
            (Repr::Exact(x), Repr::Exact(y)) => Scalar::exact(exact(x, y)),
            (x, y) => Scalar(Repr::Approx(approx(Scalar(x).to_f64(), Scalar(y).to_f64()))),
        }
    }
}

/// Exact scalars compare exactly; a comparison involving an approximate
/// scalar compares the `f64` values.
impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (&self.0, &other.0) {
            (Repr::Exact(x), Repr::Exact(y)) => x == y,
            _ => self.to_f64() == other.to_f64(),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (&self.0, &other.0) {
            (Repr::Exact(x), Repr::Exact(y)) => Some(x.cmp(y)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.zip(rhs, |x, y| x.$method(y), |x, y| x.$method(y))
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                match (&self.0, &rhs.0) {
                    (Repr::Exact(x), Repr::Exact(y)) => Scalar::exact(x.$method(y)),
                    _ => Scalar(Repr::Approx(self.to_f64().$method(rhs.to_f64()))),
                }
            }
        }
    };
}

scalar_binop!(Add, add);
scalar_binop!(Sub, sub);
scalar_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self.0 {
            Repr::Exact(r) => Scalar::exact(-r),
            Repr::Approx(v) => Scalar(Repr::Approx(-v)),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.clone().neg()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::exact(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Exact(r) => write!(f, "{r}"),
            Repr::Approx(v) => f.write_str(&format_decimal(*v, 12)),
        }
    }
}

/// Fixed-precision decimal text with the sign dropped from values that round to zero.
pub fn format_decimal(value: f64, precision: usize) -> String {
    let text = format!("{value:.precision$}");
    match text.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => text,
    }
}
