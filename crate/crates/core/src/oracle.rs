//! Independent cross-checks for the quotient algebra.
//!
//! Two pieces live here. The rotation route rebuilds `a / b` in `f64` from
//! magnitudes, the angle between the vectors and an explicitly normalized
//! axis; it shares no code with [`crate::algebra`]. The law runner evaluates
//! every registered algebraic law on seeded rational inputs by direct matrix
//! arithmetic and reports counts plus the first counterexample.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{
    decompose_2d, divide, divide_about_axis_3d, divide_oriented_2d, identity_element, inverse,
    multiply, Orientation, Wedge,
};
use crate::error::MathError;
use crate::scalar::{Mode, Rational, Scalar};
use crate::vector::{Matrix, Matrix2, Matrix3, SquareMatrix, Vector, Vector2, Vector3};

/// Per-entry tolerance for comparisons against floating-point routes.
pub const FLOAT_TOLERANCE: f64 = 1e-9;

fn to_matrix<const N: usize>(rows: [[f64; N]; N]) -> Result<Matrix<N>, MathError> {
    let mut out = Vec::with_capacity(N * N);
    for v in rows.iter().flatten() {
        out.push(Scalar::approx(*v)?);
    }
    let mut it = out.into_iter();
    Ok(Matrix::from_fn(|_, _| it.next().expect("N*N entries")))
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

/// `a / b` in 2D as `(|a|/|b|)` times the rotation by the signed angle from `b` to `a`.
pub fn divide_by_rotation_route_2d(a: &Vector2, b: &Vector2) -> Result<Matrix2, MathError> {
    if a.is_zero() || b.is_zero() {
        return Err(MathError::DivisionByZeroVector);
    }
    let [ax, ay] = a.to_f64();
    let [bx, by] = b.to_f64();
    let ratio = norm(&[ax, ay]) / norm(&[bx, by]);
    let theta = (bx * ay - by * ax).atan2(bx * ax + by * ay);
    let (sin, cos) = theta.sin_cos();
    to_matrix([[ratio * cos, -ratio * sin], [ratio * sin, ratio * cos]])
}

/// `a / b` in 3D as `αI + βR` with `α, β` from the magnitude ratio and the
/// angle, and `R` built from the unit normal of the plane of `a` and `b`.
pub fn divide_by_rotation_route_3d(a: &Vector3, b: &Vector3) -> Result<Matrix3, MathError> {
    if a.is_zero() || b.is_zero() {
        return Err(MathError::DivisionByZeroVector);
    }
    let [a1, a2, a3] = a.to_f64();
    let [b1, b2, b3] = b.to_f64();
    let normal = [a2 * b3 - a3 * b2, a3 * b1 - a1 * b3, a1 * b2 - a2 * b1];
    let sin_len = norm(&normal);
    if sin_len == 0.0 {
        return Err(MathError::ParallelVectors);
    }
    let [na, nb, nc] = normal.map(|x| x / sin_len);
    let theta = sin_len.atan2(a1 * b1 + a2 * b2 + a3 * b3);
    let ratio = norm(&[a1, a2, a3]) / norm(&[b1, b2, b3]);
    let alpha = ratio * theta.cos();
    let beta = ratio * theta.sin();
    to_matrix([
        [alpha, nc * beta, -nb * beta],
        [-nc * beta, alpha, na * beta],
        [nb * beta, -na * beta, alpha],
    ])
}

/// Dimension-dispatched rotation route.
pub trait RotationRoute<const N: usize> {
    fn rotation_route(a: &Vector<N>, b: &Vector<N>) -> Result<Matrix<N>, MathError>;
}

impl RotationRoute<2> for Vector2 {
    fn rotation_route(a: &Vector2, b: &Vector2) -> Result<Matrix2, MathError> {
        divide_by_rotation_route_2d(a, b)
    }
}

impl RotationRoute<3> for Vector3 {
    fn rotation_route(a: &Vector3, b: &Vector3) -> Result<Matrix3, MathError> {
        divide_by_rotation_route_3d(a, b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OracleError {
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
}

/// Whether a law is expected to hold on every trial, or known to fail.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Holds,
    Fails,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Law {
    Reconstruction,
    Consistency,
    ScalingLink,
    D1,
    D2,
    D3,
    D3Span,
    D3OffPlane,
    D3Full,
    D4,
    M1,
    M2Transpose,
    M2Strict,
    M3,
    M4,
    M5,
    M6,
    Determinant,
    Lagrange,
    OrientationInvariance,
    RouteAgreement,
}

impl Law {
    fn name(self) -> &'static str {
        match self {
            Law::Reconstruction => "reconstruction",
            Law::Consistency => "consistency",
            Law::ScalingLink => "scaling-link",
            Law::D1 => "D1",
            Law::D2 => "D2",
            Law::D3 => "D3",
            Law::D3Span => "D3-span",
            Law::D3OffPlane => "D3-offplane",
            Law::D3Full => "D3-full",
            Law::D4 => "D4",
            Law::M1 => "M1",
            Law::M2Transpose => "M2-transpose",
            Law::M2Strict => "M2-strict",
            Law::M3 => "M3",
            Law::M4 => "M4",
            Law::M5 => "M5",
            Law::M6 => "M6",
            Law::Determinant => "determinant",
            Law::Lagrange => "lagrange",
            Law::OrientationInvariance => "orientation-invariance",
            Law::RouteAgreement => "route-agreement",
        }
    }

    fn operands(self) -> &'static [&'static str] {
        match self {
            Law::D1 | Law::M1 | Law::M3 => &["a"],
            Law::D2 => &["b"],
            Law::D4 | Law::M4 => &["a", "b", "c"],
            Law::M5 => &["a", "b", "k"],
            _ => &["a", "b"],
        }
    }

    fn expectation(self) -> Expectation {
        match self {
            Law::M2Strict | Law::D3Full => Expectation::Fails,
            _ => Expectation::Holds,
        }
    }
}

const COMMON_LAWS: [Law; 17] = [
    Law::Reconstruction,
    Law::Consistency,
    Law::ScalingLink,
    Law::D1,
    Law::D2,
    Law::D4,
    Law::M1,
    Law::M2Transpose,
    Law::M2Strict,
    Law::M3,
    Law::M4,
    Law::M5,
    Law::M6,
    Law::Determinant,
    Law::Lagrange,
    Law::OrientationInvariance,
    Law::RouteAgreement,
];

const PLANAR_LAWS: [Law; 1] = [Law::D3];
const SPATIAL_LAWS: [Law; 3] = [Law::D3Span, Law::D3OffPlane, Law::D3Full];

/// A registered law: name (`<law>/<dim>d`) and expected status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawSpec {
    pub name: String,
    pub expectation: Expectation,
    law: Law,
    dim: usize,
}

/// Every registered law, 2D laws first.
pub fn registered_laws() -> Vec<LawSpec> {
    let spec = |law: Law, dim: usize| LawSpec {
        name: format!("{}/{}d", law.name(), dim),
        expectation: law.expectation(),
        law,
        dim,
    };
    let planar = COMMON_LAWS.iter().chain(&PLANAR_LAWS).map(|&l| spec(l, 2));
    let spatial = COMMON_LAWS.iter().chain(&SPATIAL_LAWS).map(|&l| spec(l, 3));
    planar.chain(spatial).collect()
}

/// Inputs of one trial.
#[derive(Clone, Debug, PartialEq)]
pub struct TrialInput<const N: usize> {
    pub a: Vector<N>,
    pub b: Vector<N>,
    pub c: Vector<N>,
    pub k: Rational,
}

/// Fixed inputs placed at the start of every trial set, per dimension.
pub trait TrialSpace<const N: usize>: Sized {
    /// The worked-example pair `(a, b)`.
    fn example_pair() -> (Vector<N>, Vector<N>);
    /// A vector with a perfect-square norm.
    fn square_norm() -> Vector<N>;
}

impl TrialSpace<2> for Vector2 {
    fn example_pair() -> (Vector2, Vector2) {
        (Vector::from_ints([3, -1]), Vector::from_ints([2, 5]))
    }

    fn square_norm() -> Vector2 {
        Vector::from_ints([3, 4])
    }
}

impl TrialSpace<3> for Vector3 {
    fn example_pair() -> (Vector3, Vector3) {
        (Vector::from_ints([3, -1, 2]), Vector::from_ints([2, 5, 1]))
    }

    fn square_norm() -> Vector3 {
        Vector::from_ints([2, 3, 6])
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let numer: i64 = rng.gen_range(-20..=20);
    let denom: i64 = rng.gen_range(1..=9);
    Rational::new(numer, denom).expect("denominator is positive")
}

fn random_vector<const N: usize>(rng: &mut ChaCha8Rng) -> Vector<N> {
    Vector::new(std::array::from_fn(|_| Scalar::exact(random_rational(rng))))
}

/// Deterministic trial set.
///
/// Indices 0–4 are fixed: the worked example, `a = 0`, `a ∥ b`, `b = 0`, and a
/// perfect-square `a`. The rest are random with numerators in `[-20, 20]` and
/// denominators in `[1, 9]`.
pub fn generate_trials<const N: usize>(seed: u64, count: usize) -> Vec<TrialInput<N>>
where
    Vector<N>: TrialSpace<N>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(N as u64);
    (0..count)
        .map(|i| {
            let mut t = TrialInput {
                a: random_vector(&mut rng),
                b: random_vector(&mut rng),
                c: random_vector(&mut rng),
                k: random_rational(&mut rng),
            };
            match i {
                0 => (t.a, t.b) = Vector::<N>::example_pair(),
                1 => t.a = Vector::zero(Mode::Exact),
                2 => t.a = t.b.scale(&Scalar::exact(t.k.clone())),
                3 => t.b = Vector::zero(Mode::Exact),
                4 => t.a = Vector::<N>::square_norm(),
                _ => {}
            }
            t
        })
        .collect()
}

/// The first failing trial of a law.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    pub trial: usize,
    pub inputs: Vec<(&'static str, String)>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OracleReport {
    pub law_name: String,
    pub trials: usize,
    pub failures: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "LAW {} trials={} failures={}",
            self.law_name, self.trials, self.failures
        )?;
        if let Some(cx) = &self.first_counterexample {
            write!(f, "\n  counterexample trial={}", cx.trial)?;
            for (name, value) in &cx.inputs {
                write!(f, " {name}={value}")?;
            }
            write!(f, "\n    lhs={}\n    rhs={}", cx.lhs, cx.rhs)?;
        }
        Ok(())
    }
}

struct Mismatch {
    lhs: String,
    rhs: String,
}

type Check = Result<(), Mismatch>;

fn same<T: PartialEq + fmt::Display>(lhs: &T, rhs: &T) -> Check {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Mismatch {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn close<const N: usize>(lhs: &Matrix<N>, rhs: &Matrix<N>) -> Check {
    if lhs.approx_eq(rhs, FLOAT_TOLERANCE) {
        Ok(())
    } else {
        Err(Mismatch {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

fn fails_with<T: fmt::Debug>(result: Result<T, MathError>, expected: MathError) -> Check {
    match result {
        Err(e) if e == expected => Ok(()),
        other => Err(Mismatch {
            lhs: format!("{other:?}"),
            rhs: format!("Err({expected:?})"),
        }),
    }
}

fn identity<const N: usize>() -> Matrix<N> {
    Matrix::identity(Mode::Exact)
}

/// Laws with a single formulation for both dimensions.
fn check_common<const N: usize>(law: Law, t: &TrialInput<N>) -> Option<Check>
where
    Vector<N>: Wedge<N> + RotationRoute<N>,
    Matrix<N>: SquareMatrix,
{
    let TrialInput { a, b, c, k } = t;
    let check = match law {
        Law::Reconstruction => match divide(a, b) {
            Ok(e) => same(&e.apply(b), a),
            Err(err) => fails_with(Err::<(), _>(err), MathError::DivisionByZeroVector)
                .and(same(&b.is_zero(), &true)),
        },
        Law::Consistency => {
            if b.is_zero() {
                fails_with(inverse(b), MathError::ZeroVectorInverse)
                    .and(fails_with(divide(a, b), MathError::DivisionByZeroVector))
            } else {
                let inv_b = inverse(b).expect("b is nonzero");
                same(
                    divide(a, b).expect("b is nonzero").matrix(),
                    multiply(a, &inv_b).matrix(),
                )
            }
        }
        Law::ScalingLink => {
            if b.is_zero() {
                same(&multiply(a, b).matrix().is_zero(), &true)
            } else {
                let scaled = divide(a, b)
                    .expect("b is nonzero")
                    .matrix()
                    .scale(&b.norm_sq());
                same(multiply(a, b).matrix(), &scaled)
            }
        }
        Law::D1 => match divide(a, a) {
            Ok(e) => same(e.matrix(), &identity()),
            Err(err) => fails_with(Err::<(), _>(err), MathError::DivisionByZeroVector)
                .and(same(&a.is_zero(), &true)),
        },
        Law::D2 => {
            let zero = Vector::zero(Mode::Exact);
            if b.is_zero() {
                fails_with(divide(&zero, b), MathError::DivisionByZeroVector)
            } else {
                same(
                    divide(&zero, b).expect("b is nonzero").matrix(),
                    &Matrix::zero(Mode::Exact),
                )
            }
        }
        Law::D4 => {
            if c.is_zero() {
                fails_with(divide(&(a + b), c), MathError::DivisionByZeroVector)
            } else {
                let lhs = divide(&(a + b), c).expect("c is nonzero");
                let rhs = divide(a, c).expect("c is nonzero").matrix()
                    + divide(b, c).expect("c is nonzero").matrix();
                same(lhs.matrix(), &rhs)
            }
        }
        Law::M1 => match inverse(a) {
            Ok(inv) => same(multiply(a, &inv).matrix(), &identity()),
            Err(err) => fails_with(Err::<(), _>(err), MathError::ZeroVectorInverse)
                .and(same(&a.is_zero(), &true)),
        },
        Law::M2Transpose => {
            let ab = multiply(a, b);
            let ba = multiply(b, a);
            same(ba.matrix(), &ab.matrix().transpose()).and(same(ab.alpha(), ba.alpha()))
        }
        Law::M2Strict => same(multiply(a, b).matrix(), multiply(b, a).matrix()),
        Law::M3 => match identity_element(a) {
            Ok(u) => {
                let norm = a.norm_sq().sqrt().expect("norm_sq is non-negative");
                let target = identity::<N>().scale(&norm);
                let au = multiply(a, &u).into_matrix();
                let ua = multiply(&u, a).into_matrix();
                if u.mode() == Mode::Exact && norm.mode() == Mode::Exact {
                    same(&au, &target).and(same(&ua, &target))
                } else {
                    close(&au, &target).and(close(&ua, &target))
                }
            }
            Err(err) => fails_with(Err::<(), _>(err), MathError::ZeroVectorInverse)
                .and(same(&a.is_zero(), &true)),
        },
        Law::M4 => {
            let rhs = multiply(a, b).matrix() + multiply(a, c).matrix();
            same(multiply(a, &(b + c)).matrix(), &rhs)
        }
        Law::M5 => {
            let k = Scalar::exact(k.clone());
            same(
                multiply(a, &b.scale(&k)).matrix(),
                &multiply(a, b).matrix().scale(&k),
            )
        }
        Law::M6 => {
            let zero_product = multiply(a, b).matrix().is_zero();
            same(&zero_product, &(a.is_zero() || b.is_zero()))
        }
        Law::RouteAgreement => match Vector::<N>::rotation_route(a, b) {
            Ok(route) => close(
                &route,
                &divide(a, b).expect("route accepted b").into_matrix(),
            ),
            Err(MathError::ParallelVectors) => same(
                &(N == 3 && !a.is_zero() && !b.is_zero() && a.wedge_norm_sq(b).is_zero()),
                &true,
            ),
            Err(err) => fails_with(Err::<(), _>(err), MathError::DivisionByZeroVector)
                .and(same(&(a.is_zero() || b.is_zero()), &true)),
        },
        _ => return None,
    };
    Some(check)
}

fn check_planar(law: Law, t: &TrialInput<2>) -> Check {
    if let Some(check) = check_common(law, t) {
        return check;
    }
    let TrialInput { a, b, .. } = t;
    match law {
        Law::D3 => {
            if a.is_zero() || b.is_zero() {
                let zero = if a.is_zero() { a } else { b };
                fails_with(divide(zero, zero), MathError::DivisionByZeroVector)
            } else {
                let product = divide(a, b)
                    .unwrap()
                    .matrix()
                    .mul_mat(divide(b, a).unwrap().matrix());
                same(&product, &identity())
            }
        }
        Law::Determinant => match decompose_2d(a, b, Orientation::Ccw) {
            Ok(d) => {
                let det = divide(a, b).unwrap().det();
                same(&(&det * &b.norm_sq()), &a.norm_sq())
                    .and(same(&det, &(&(&d.alpha * &d.alpha) + &(&d.beta * &d.beta))))
            }
            Err(err) => fails_with(Err::<(), _>(err), MathError::DivisionByZeroVector),
        },
        Law::Lagrange => {
            let (dot, perp) = (a.dot(b), a.perp_dot(b));
            let target = &a.norm_sq() * &b.norm_sq();
            let m = multiply(a, b).into_matrix();
            let (p, q) = (m.entry(0, 0), m.entry(1, 0));
            same(&(&(&dot * &dot) + &(&perp * &perp)), &target)
                .and(same(&(&(p * p) + &(q * q)), &target))
                .and(same(m.entry(1, 1), p))
                .and(same(m.entry(0, 1), &-q))
        }
        Law::OrientationInvariance => match divide(a, b) {
            Ok(e) => {
                let ccw = divide_oriented_2d(a, b, Orientation::Ccw).unwrap();
                let cw = divide_oriented_2d(a, b, Orientation::Cw).unwrap();
                same(ccw.matrix(), cw.matrix()).and(same(ccw.matrix(), e.matrix()))
            }
            Err(err) => fails_with(Err::<(), _>(err), MathError::DivisionByZeroVector),
        },
        _ => unreachable!("{} is not a 2D law", law.name()),
    }
}

fn check_spatial(law: Law, t: &TrialInput<3>) -> Check {
    if let Some(check) = check_common(law, t) {
        return check;
    }
    let TrialInput { a, b, .. } = t;
    if a.is_zero() || b.is_zero() {
        // every remaining 3D law divides by both a and b, except the identities below
        if !matches!(law, Law::Lagrange | Law::Determinant) {
            let zero = if a.is_zero() { a } else { b };
            return fails_with(divide(zero, zero), MathError::DivisionByZeroVector);
        }
    }
    let round_trip = || {
        divide(a, b)
            .unwrap()
            .matrix()
            .mul_mat(divide(b, a).unwrap().matrix())
    };
    match law {
        Law::D3Span => {
            let p = round_trip();
            same(&p.mul_vec(a), a).and(same(&p.mul_vec(b), b))
        }
        Law::D3OffPlane => {
            let w = a.cross(b);
            let dot = a.dot(b);
            let factor = (&dot * &dot)
                .checked_div(&(&a.norm_sq() * &b.norm_sq()))
                .unwrap();
            same(&round_trip().mul_vec(&w), &w.scale(&factor))
        }
        Law::D3Full => same(&round_trip(), &identity()),
        Law::Determinant => match divide(a, b) {
            Ok(e) => {
                let det = e.det();
                let (dot, c) = (a.dot(b), a.cross(b));
                let b_sq = b.norm_sq();
                let b6 = &(&b_sq * &b_sq) * &b_sq;
                let cleared = &dot * &(&(&dot * &dot) + &c.norm_sq());
                let alpha = dot.checked_div(&b_sq).unwrap();
                let beta_sq = c.norm_sq().checked_div(&(&b_sq * &b_sq)).unwrap();
                let angle_form = &alpha * &(&(&alpha * &alpha) + &beta_sq);
                same(&(&det * &b6), &cleared).and(same(&det, &angle_form))
            }
            Err(err) => fails_with(Err::<(), _>(err), MathError::DivisionByZeroVector),
        },
        Law::Lagrange => {
            let dot = a.dot(b);
            let target = &a.norm_sq() * &b.norm_sq();
            let m = multiply(a, b).into_matrix();
            let off_diagonal = [(0, 1), (0, 2), (1, 2)]
                .iter()
                .fold(Scalar::int(0), |acc, &(i, j)| {
                    acc + m.entry(i, j) * m.entry(i, j)
                });
            same(&(&(&dot * &dot) + &a.cross(b).norm_sq()), &target)
                .and(same(&(&(&dot * &dot) + &off_diagonal), &target))
        }
        Law::OrientationInvariance => {
            let c = a.cross(b);
            let axis = if c.is_zero() {
                Vector::from_ints([0, 0, 1])
            } else {
                c
            };
            let plus = divide_about_axis_3d(a, b, &axis).unwrap();
            let minus = divide_about_axis_3d(a, b, &-&axis).unwrap();
            same(plus.matrix(), minus.matrix())
                .and(same(plus.matrix(), divide(a, b).unwrap().matrix()))
        }
        _ => unreachable!("{} is not a 3D law", law.name()),
    }
}

fn input_text<const N: usize>(t: &TrialInput<N>, name: &str) -> String {
    match name {
        "a" => t.a.to_string(),
        "b" => t.b.to_string(),
        "c" => t.c.to_string(),
        _ => t.k.to_string(),
    }
}

fn run_law<const N: usize>(
    spec: &LawSpec,
    trials: &[TrialInput<N>],
    check: impl Fn(Law, &TrialInput<N>) -> Check,
) -> OracleReport {
    let mut report = OracleReport {
        law_name: spec.name.clone(),
        trials: trials.len(),
        failures: 0,
        first_counterexample: None,
    };
    for (i, t) in trials.iter().enumerate() {
        if let Err(m) = check(spec.law, t) {
            report.failures += 1;
            if report.first_counterexample.is_none() {
                report.first_counterexample = Some(Counterexample {
                    trial: i,
                    inputs: spec
                        .law
                        .operands()
                        .iter()
                        .map(|&n| (n, input_text(t, n)))
                        .collect(),
                    lhs: m.lhs,
                    rhs: m.rhs,
                });
            }
        }
    }
    report
}

fn find_law(name: &str) -> Result<LawSpec, OracleError> {
    registered_laws()
        .into_iter()
        .find(|l| l.name == name)
        .ok_or_else(|| OracleError::UnknownLaw(name.to_string()))
}

/// Runs one registered law over `trials` seeded inputs.
pub fn brute_force_law_check(
    law: &str,
    seed: u64,
    trials: usize,
) -> Result<OracleReport, OracleError> {
    let spec = find_law(law)?;
    Ok(if spec.dim == 2 {
        run_law(&spec, &generate_trials::<2>(seed, trials), check_planar)
    } else {
        run_law(&spec, &generate_trials::<3>(seed, trials), check_spatial)
    })
}

/// Reports for the whole registry, in registry order.
#[derive(Clone, Debug, PartialEq)]
pub struct SuiteReport {
    pub entries: Vec<(LawSpec, OracleReport)>,
}

impl SuiteReport {
    /// Whether a law's outcome matches its expectation.
    pub fn status_ok(spec: &LawSpec, report: &OracleReport) -> bool {
        match spec.expectation {
            Expectation::Holds => report.failures == 0,
            Expectation::Fails => report.first_counterexample.is_some(),
        }
    }

    pub fn mismatches(&self) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|(s, r)| !Self::status_ok(s, r))
            .map(|(s, _)| s.name.as_str())
            .collect()
    }

    pub fn passed(&self) -> bool {
        self.mismatches().is_empty()
    }
}

/// Runs every registered law; the trial set is generated once per dimension.
pub fn run_suite(seed: u64, trials: usize) -> SuiteReport {
    let planar = generate_trials::<2>(seed, trials);
    let spatial = generate_trials::<3>(seed, trials);
    let entries = registered_laws()
        .into_iter()
        .map(|spec| {
            let report = if spec.dim == 2 {
                run_law(&spec, &planar, check_planar)
            } else {
                run_law(&spec, &spatial, check_spatial)
            };
            (spec, report)
        })
        .collect();
    SuiteReport { entries }
}

/// Random non-degenerate float pairs with components in `[-10, 10)`.
///
/// Floats are exactly rational, so the closed form can be evaluated exactly on
/// the same inputs the rotation route sees.
pub fn float_pairs<const N: usize>(seed: u64, count: usize) -> Vec<(Vector<N>, Vector<N>)>
where
    Vector<N>: RotationRoute<N>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(100 + N as u64);
    let mut pairs = Vec::with_capacity(count);
    while pairs.len() < count {
        let mut draw = || -> Vector<N> {
            Vector::new(std::array::from_fn(|_| {
                let x: f64 = rng.gen_range(-10.0..10.0);
                Scalar::exact(Rational::from_f64(x).expect("finite"))
            }))
        };
        let (a, b) = (draw(), draw());
        if Vector::<N>::rotation_route(&a, &b).is_ok() {
            pairs.push((a, b));
        }
    }
    pairs
}
