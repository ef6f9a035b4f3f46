//! Quotient and product matrices of vector pairs.
//!
//! For `b ≠ 0` the quotient `a / b` is the matrix `E = αI + βR` that turns `b`
//! into `a`: `α` scales along `b`, `β` scales along the quarter-turned `b`.
//! The product `a ⊗ b` has the same shape with `α = a·b` and `β = a·(Rb)`, so
//! `a ⊗ b = |b|² (a / b)`.
//!
//! In 3D both `β` and `R` carry the irrational factor `|a × b|`, while their
//! product does not. The production routines therefore build the skew part
//! directly from `a × b` and stay exact for rational inputs. The literal
//! `αI + βR` construction is kept in [`divide_oriented_2d`] and
//! [`divide_about_axis_3d`].

use crate::error::MathError;
use crate::scalar::Scalar;
use crate::vector::{
    cross_matrix, Matrix, Matrix2, Matrix3, SquareMatrix, Vector, Vector2, Vector3,
};

/// Which of the two perpendiculars of a 2D vector is used.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Orientation {
    /// Quarter-turn counterclockwise: `(x, y) -> (-y, x)`.
    #[default]
    Ccw,
    /// Quarter-turn clockwise: `(x, y) -> (y, -x)`.
    Cw,
}

pub fn perp_2d(b: &Vector2, orientation: Orientation) -> Vector2 {
    match orientation {
        Orientation::Ccw => Vector::new([-b.y(), b.x().clone()]),
        Orientation::Cw => Vector::new([b.y().clone(), -b.x()]),
    }
}

/// Dimension-specific skew part of the product.
pub trait Wedge<const N: usize> {
    /// Skew-symmetric part of `self ⊗ other`.
    ///
    /// 2D: `perp_dot(self, other) · R_ccw`. 3D: the transpose of the
    /// cross-product matrix of `self × other`.
    fn wedge_matrix(&self, other: &Vector<N>) -> Matrix<N>;

    /// `perp_dot²` in 2D, `|self × other|²` in 3D.
    fn wedge_norm_sq(&self, other: &Vector<N>) -> Scalar;
}

impl Wedge<2> for Vector2 {
    fn wedge_matrix(&self, other: &Vector2) -> Matrix2 {
        let beta = self.perp_dot(other);
        let zero = Scalar::zero(beta.mode());
        Matrix::new([[zero.clone(), -&beta], [beta, zero]])
    }

    fn wedge_norm_sq(&self, other: &Vector2) -> Scalar {
        let p = self.perp_dot(other);
        &p * &p
    }
}

impl Wedge<3> for Vector3 {
    fn wedge_matrix(&self, other: &Vector3) -> Matrix3 {
        cross_matrix(&self.cross(other)).transpose()
    }

    fn wedge_norm_sq(&self, other: &Vector3) -> Scalar {
        self.cross(other).norm_sq()
    }
}

/// A quotient or product matrix together with its symmetric and skew parts.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientMatrix<const N: usize> {
    matrix: Matrix<N>,
    alpha: Scalar,
    skew: Matrix<N>,
}

impl<const N: usize> QuotientMatrix<N> {
    fn from_parts(alpha: Scalar, skew: Matrix<N>) -> Self {
        let mode = alpha.mode().join(skew.mode());
        let matrix = &Matrix::identity(mode).scale(&alpha) + &skew;
        QuotientMatrix {
            matrix,
            alpha,
            skew,
        }
    }

    pub fn matrix(&self) -> &Matrix<N> {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix<N> {
        self.matrix
    }

    /// Coefficient of the identity.
    pub fn alpha(&self) -> &Scalar {
        &self.alpha
    }

    /// The skew-symmetric part `βR`.
    pub fn skew(&self) -> &Matrix<N> {
        &self.skew
    }

    pub fn apply(&self, v: &Vector<N>) -> Vector<N> {
        self.matrix.mul_vec(v)
    }
}

impl<const N: usize> QuotientMatrix<N>
where
    Matrix<N>: SquareMatrix,
{
    pub fn det(&self) -> Scalar {
        self.matrix.det()
    }
}

/// `a / b`: the matrix `E` with `E b = a`.
pub fn divide<const N: usize>(a: &Vector<N>, b: &Vector<N>) -> Result<QuotientMatrix<N>, MathError>
where
    Vector<N>: Wedge<N>,
{
    if b.is_zero() {
        return Err(MathError::DivisionByZeroVector);
    }
    let inv = b.norm_sq().recip()?;
    Ok(QuotientMatrix::from_parts(
        &a.dot(b) * &inv,
        a.wedge_matrix(b).scale(&inv),
    ))
}

/// `a ⊗ b`. Total: a zero factor gives the zero matrix.
pub fn multiply<const N: usize>(a: &Vector<N>, b: &Vector<N>) -> QuotientMatrix<N>
where
    Vector<N>: Wedge<N>,
{
    QuotientMatrix::from_parts(a.dot(b), a.wedge_matrix(b))
}

/// `a⁻¹ = a / |a|²`, the vector with `a ⊗ a⁻¹ = I`.
pub fn inverse<const N: usize>(a: &Vector<N>) -> Result<Vector<N>, MathError> {
    if a.is_zero() {
        return Err(MathError::ZeroVectorInverse);
    }
    a.checked_div_scalar(&a.norm_sq())
}

/// `u = a / |a|`, for which `a ⊗ u = u ⊗ a = |a| I`.
///
/// Exact when `|a|²` is a perfect square, approximate otherwise.
pub fn identity_element<const N: usize>(a: &Vector<N>) -> Result<Vector<N>, MathError> {
    if a.is_zero() {
        return Err(MathError::ZeroVectorInverse);
    }
    a.checked_div_scalar(&a.norm_sq().sqrt()?)
}

/// Unit axis `(a × b) / |a × b|`, always approximate.
pub fn axis_of(a: &Vector3, b: &Vector3) -> Result<Vector3, MathError> {
    let c = a.cross(b);
    if c.is_zero() {
        return Err(MathError::ParallelVectors);
    }
    let c = c.to_approx();
    let norm = c.norm_sq().sqrt()?;
    if norm.is_zero() {
        // underflow of a tiny approximate cross product
        return Err(MathError::ParallelVectors);
    }
    c.checked_div_scalar(&norm)
}

/// A quarter-turn matrix `R`, skew-symmetric in both dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct PerpRotation<const N: usize> {
    matrix: Matrix<N>,
    axis: Option<Vector3>,
}

impl<const N: usize> PerpRotation<N> {
    pub fn matrix(&self) -> &Matrix<N> {
        &self.matrix
    }

    /// The axis the rotation was built from; `None` in 2D.
    pub fn axis(&self) -> Option<&Vector3> {
        self.axis.as_ref()
    }
}

/// 2D quarter-turn: `[[0,-1],[1,0]]` for CCW, its transpose for CW.
pub fn perp_rotation_2d(orientation: Orientation) -> PerpRotation<2> {
    let ccw = Matrix::from_ints([[0, -1], [1, 0]]);
    let matrix = match orientation {
        Orientation::Ccw => ccw,
        Orientation::Cw => ccw.transpose(),
    };
    PerpRotation { matrix, axis: None }
}

/// 3D quarter-turn about `axis = (A, B, C)`: `[[0,C,-B],[-C,0,A],[B,-A,0]]`.
///
/// A unit axis gives the rotation proper. A raw, unnormalized axis (such as
/// `a × b` itself) gives the same matrix scaled by `|axis|`, which keeps the
/// entries rational.
pub fn perp_rotation_3d(axis: &Vector3) -> Result<PerpRotation<3>, MathError> {
    if axis.is_zero() {
        return Err(MathError::ZeroAxis);
    }
    Ok(PerpRotation {
        matrix: cross_matrix(axis).transpose(),
        axis: Some(axis.clone()),
    })
}

/// `a = alpha·b + beta·(R b)`, split into its parallel and perpendicular parts.
#[derive(Clone, Debug, PartialEq)]
pub struct DecompCoefficients<const N: usize> {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub parallel_part: Vector<N>,
    pub perp_part: Vector<N>,
}

/// 2D decomposition; `beta` carries the sign of the chosen orientation.
pub fn decompose_2d(
    a: &Vector2,
    b: &Vector2,
    orientation: Orientation,
) -> Result<DecompCoefficients<2>, MathError> {
    if b.is_zero() {
        return Err(MathError::DivisionByZeroVector);
    }
    let b_sq = b.norm_sq();
    let b_perp = perp_2d(b, orientation);
    let alpha = a.dot(b).checked_div(&b_sq)?;
    let beta = a.dot(&b_perp).checked_div(&b_sq)?;
    Ok(DecompCoefficients {
        parallel_part: b.scale(&alpha),
        perp_part: b_perp.scale(&beta),
        alpha,
        beta,
    })
}

/// 3D decomposition with `beta = |a × b| / |b|² ≥ 0`.
///
/// `beta` is exact only when `|a × b|²` is a perfect square. The
/// perpendicular part is `b × (a × b) / |b|²`, exact for rational input.
pub fn decompose_3d(a: &Vector3, b: &Vector3) -> Result<DecompCoefficients<3>, MathError> {
    if b.is_zero() {
        return Err(MathError::DivisionByZeroVector);
    }
    let b_sq = b.norm_sq();
    let c = a.cross(b);
    let alpha = a.dot(b).checked_div(&b_sq)?;
    let beta = c.norm_sq().sqrt()?.checked_div(&b_sq)?;
    Ok(DecompCoefficients {
        parallel_part: b.scale(&alpha),
        perp_part: b.cross(&c).checked_div_scalar(&b_sq)?,
        alpha,
        beta,
    })
}

/// 2D quotient built literally as `αI + βR` for the given orientation.
pub fn divide_oriented_2d(
    a: &Vector2,
    b: &Vector2,
    orientation: Orientation,
) -> Result<QuotientMatrix<2>, MathError> {
    let d = decompose_2d(a, b, orientation)?;
    let r = perp_rotation_2d(orientation);
    Ok(QuotientMatrix::from_parts(d.alpha, r.matrix.scale(&d.beta)))
}

/// 3D quotient built literally as `αI + βR` about an arbitrary nonzero axis.
///
/// With `R_n` the rotation for unit `n = axis/|axis|` and `β = a·(R_n b)/|b|²`,
/// the skew part is `(a·(R b)) R / (|axis|² |b|²)` for the raw-axis matrix `R`,
/// which needs no square root. For an axis along `±(a × b)` this equals
/// [`divide`].
pub fn divide_about_axis_3d(
    a: &Vector3,
    b: &Vector3,
    axis: &Vector3,
) -> Result<QuotientMatrix<3>, MathError> {
    if b.is_zero() {
        return Err(MathError::DivisionByZeroVector);
    }
    let r = perp_rotation_3d(axis)?;
    let b_sq = b.norm_sq();
    let alpha = a.dot(b).checked_div(&b_sq)?;
    let beta_raw = a.dot(&r.matrix.mul_vec(b));
    let skew = r
        .matrix
        .scale(&beta_raw.checked_div(&(&axis.norm_sq() * &b_sq))?);
    Ok(QuotientMatrix::from_parts(alpha, skew))
}

/// Angle, magnitude ratio and determinant of `a / b`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientDiagnostics {
    /// Unsigned angle between `a` and `b`, in `[0, π]`.
    pub theta: f64,
    /// `|a| / |b|`.
    pub magnitude_ratio: f64,
    /// Determinant of `a / b`, exact for exact input.
    pub det: Scalar,
}

pub fn diagnostics<const N: usize>(
    a: &Vector<N>,
    b: &Vector<N>,
) -> Result<QuotientDiagnostics, MathError>
where
    Vector<N>: Wedge<N>,
    Matrix<N>: SquareMatrix,
{
    if a.is_zero() || b.is_zero() {
        return Err(MathError::DivisionByZeroVector);
    }
    let e = divide(a, b)?;
    let sin_part = a.wedge_norm_sq(b).to_f64().sqrt();
    let theta = sin_part.atan2(a.dot(b).to_f64());
    let ratio = a.norm_sq().checked_div(&b.norm_sq())?;
    Ok(QuotientDiagnostics {
        theta,
        magnitude_ratio: ratio.to_f64().sqrt(),
        det: e.det(),
    })
}
