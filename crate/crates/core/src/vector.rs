//! Fixed-dimension vectors and square matrices over [`Scalar`].
//!
//! Matrices use row-major semantics: `entry(i, j)` is row `i`, column `j`,
//! and text forms list rows.

use std::array;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::MathError;
use crate::scalar::{Mode, Scalar, MAX_EXACT_BITS};

fn common_mode<'a>(items: impl IntoIterator<Item = &'a Scalar>) -> Mode {
    items.into_iter().fold(Mode::Exact, |m, s| m.join(s.mode()))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Vector<const N: usize>([Scalar; N]);

pub type Vector2 = Vector<2>;
pub type Vector3 = Vector<3>;

impl<const N: usize> Vector<N> {
    /// Builds a vector; if any component is approximate, all become approximate.
    pub fn new(components: [Scalar; N]) -> Self {
        let mode = common_mode(&components);
        Vector(components.map(|c| c.coerce(mode)))
    }

    pub fn from_ints(components: [i64; N]) -> Self {
        Vector(components.map(Scalar::int))
    }

    pub fn zero(mode: Mode) -> Self {
        Vector(array::from_fn(|_| Scalar::zero(mode)))
    }

    pub fn components(&self) -> &[Scalar; N] {
        &self.0
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.0[i]
    }

    pub fn mode(&self) -> Mode {
        common_mode(&self.0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn to_approx(&self) -> Self {
        Vector(array::from_fn(|i| self.0[i].to_approx()))
    }

    pub fn to_f64(&self) -> [f64; N] {
        array::from_fn(|i| self.0[i].to_f64())
    }

    pub fn dot(&self, other: &Vector<N>) -> Scalar {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(Mode::Exact), |acc, (x, y)| acc + x * y)
    }

    pub fn norm_sq(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Vector(array::from_fn(|i| &self.0[i] * k))
    }

    pub fn checked_div_scalar(&self, k: &Scalar) -> Result<Self, MathError> {
        let inv = k.recip()?;
        Ok(self.scale(&inv))
    }

    pub fn approx_eq(&self, other: &Vector<N>, rel_tol: f64) -> bool {
        self.0
            .iter()
            .zip(&other.0)
            .all(|(x, y)| x.approx_eq(y, rel_tol))
    }
}

impl Vector<2> {
    pub fn x(&self) -> &Scalar {
        &self.0[0]
    }

    pub fn y(&self) -> &Scalar {
        &self.0[1]
    }

    /// `self · (R other)` for the counterclockwise quarter-turn `R`,
    /// i.e. `self.y * other.x - self.x * other.y`.
    pub fn perp_dot(&self, other: &Vector2) -> Scalar {
        &(self.y() * other.x()) - &(self.x() * other.y())
    }
}

impl Vector<3> {
    /// Right-handed cross product.
    pub fn cross(&self, other: &Vector3) -> Vector3 {
        let [a1, a2, a3] = &self.0;
        let [b1, b2, b3] = &other.0;
        Vector([
            &(a2 * b3) - &(a3 * b2),
            &(a3 * b1) - &(a1 * b3),
            &(a1 * b2) - &(a2 * b1),
        ])
    }
}

impl<const N: usize> Add for &Vector<N> {
    type Output = Vector<N>;
    fn add(self, rhs: &Vector<N>) -> Vector<N> {
        Vector(array::from_fn(|i| &self.0[i] + &rhs.0[i]))
    }
}

impl<const N: usize> Sub for &Vector<N> {
    type Output = Vector<N>;
    fn sub(self, rhs: &Vector<N>) -> Vector<N> {
        Vector(array::from_fn(|i| &self.0[i] - &rhs.0[i]))
    }
}

impl<const N: usize> Neg for &Vector<N> {
    type Output = Vector<N>;
    fn neg(self) -> Vector<N> {
        Vector(array::from_fn(|i| -&self.0[i]))
    }
}

impl<const N: usize> fmt::Display for Vector<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}

fn write_list<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    items: impl Iterator<Item = T>,
) -> fmt::Result {
    f.write_str("[")?;
    for (i, item) in items.enumerate() {
        if i > 0 {
            f.write_str(", ")?;
        }
        write!(f, "{item}")?;
    }
    f.write_str("]")
}

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<const N: usize>([[Scalar; N]; N]);

pub type Matrix2 = Matrix<2>;
pub type Matrix3 = Matrix<3>;

impl<const N: usize> Matrix<N> {
    /// Builds a matrix from rows; mode coercion as for [`Vector::new`].
    pub fn new(rows: [[Scalar; N]; N]) -> Self {
        let mode = common_mode(rows.iter().flatten());
        Matrix(rows.map(|row| row.map(|e| e.coerce(mode))))
    }

    pub fn from_ints(rows: [[i64; N]; N]) -> Self {
        Matrix(rows.map(|row| row.map(Scalar::int)))
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        Matrix::new(array::from_fn(|i| array::from_fn(|j| f(i, j))))
    }

    pub fn identity(mode: Mode) -> Self {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| {
                if i == j {
                    Scalar::one(mode)
                } else {
                    Scalar::zero(mode)
                }
            })
        }))
    }

    pub fn zero(mode: Mode) -> Self {
        Matrix(array::from_fn(|_| array::from_fn(|_| Scalar::zero(mode))))
    }

    pub fn rows(&self) -> &[[Scalar; N]; N] {
        &self.0
    }

    pub fn entry(&self, row: usize, col: usize) -> &Scalar {
        &self.0[row][col]
    }

    pub fn mode(&self) -> Mode {
        common_mode(self.0.iter().flatten())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Scalar::is_zero)
    }

    pub fn to_approx(&self) -> Self {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| self.0[i][j].to_approx())
        }))
    }

    pub fn transpose(&self) -> Self {
        Matrix(array::from_fn(|i| array::from_fn(|j| self.0[j][i].clone())))
    }

    pub fn is_skew_symmetric(&self) -> bool {
        (0..N).all(|i| (0..N).all(|j| self.0[i][j] == -&self.0[j][i]))
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Matrix(array::from_fn(|i| array::from_fn(|j| &self.0[i][j] * k)))
    }

    pub fn mul_mat(&self, other: &Matrix<N>) -> Self {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| {
                (0..N).fold(Scalar::zero(Mode::Exact), |acc, k| {
                    acc + &self.0[i][k] * &other.0[k][j]
                })
            })
        }))
    }

    pub fn mul_vec(&self, v: &Vector<N>) -> Vector<N> {
        Vector(array::from_fn(|i| {
            (0..N).fold(Scalar::zero(Mode::Exact), |acc, k| {
                acc + &self.0[i][k] * v.get(k)
            })
        }))
    }

    /// Integer power; negative exponents invert first.
    pub fn pow(&self, exp: i32) -> Result<Self, MathError>
    where
        Self: SquareMatrix,
    {
        let mut base = if exp < 0 {
            self.inverse()?
        } else {
            self.clone()
        };
        let mut result = Matrix::identity(self.mode());
        let mut n = exp.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_mat(&base).bounded()?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_mat(&base).bounded()?;
            }
        }
        Ok(result)
    }

    fn bounded(self) -> Result<Self, MathError> {
        if self.0.iter().flatten().any(|x| x.bits() > MAX_EXACT_BITS) {
            Err(MathError::ResultTooLarge)
        } else {
            Ok(self)
        }
    }

    pub fn approx_eq(&self, other: &Matrix<N>, rel_tol: f64) -> bool {
        self.0
            .iter()
            .flatten()
            .zip(other.0.iter().flatten())
            .all(|(x, y)| x.approx_eq(y, rel_tol))
    }
}

/// Operations whose formulas depend on the dimension.
pub trait SquareMatrix: Sized {
    fn det(&self) -> Scalar;
    fn inverse(&self) -> Result<Self, MathError>;
}

impl SquareMatrix for Matrix<2> {
    fn det(&self) -> Scalar {
        let [[a, b], [c, d]] = &self.0;
        &(a * d) - &(b * c)
    }

    fn inverse(&self) -> Result<Self, MathError> {
        let det = self.det();
        if det.is_zero() {
            return Err(MathError::SingularMatrix);
        }
        let [[a, b], [c, d]] = &self.0;
        let adj = Matrix([[d.clone(), -b], [-c, a.clone()]]);
        Ok(adj.scale(&det.recip()?))
    }
}

impl SquareMatrix for Matrix<3> {
    fn det(&self) -> Scalar {
        let m = &self.0;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
        };
        &(&(&m[0][0] * &minor(1, 2, 1, 2)) - &(&m[0][1] * &minor(1, 2, 0, 2)))
            + &(&m[0][2] * &minor(1, 2, 0, 1))
    }

    fn inverse(&self) -> Result<Self, MathError> {
        let det = self.det();
        if det.is_zero() {
            return Err(MathError::SingularMatrix);
        }
        let inv_det = det.recip()?;
        let m = &self.0;
        // adjugate via cyclic cofactors
        let cof = |i: usize, j: usize| {
            let (r1, r2) = ((i + 1) % 3, (i + 2) % 3);
            let (c1, c2) = ((j + 1) % 3, (j + 2) % 3);
            &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
        };
        Ok(Matrix(array::from_fn(|i| {
            array::from_fn(|j| &cof(j, i) * &inv_det)
        })))
    }
}

/// The standard cross-product matrix `K` of `v`, with `K w = v × w`.
pub fn cross_matrix(v: &Vector3) -> Matrix3 {
    let [x, y, z] = v.components();
    let zero = Scalar::zero(v.mode());
    Matrix([
        [zero.clone(), -z, y.clone()],
        [z.clone(), zero.clone(), -x],
        [-y, x.clone(), zero],
    ])
}

impl<const N: usize> Add for &Matrix<N> {
    type Output = Matrix<N>;
    fn add(self, rhs: &Matrix<N>) -> Matrix<N> {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| &self.0[i][j] + &rhs.0[i][j])
        }))
    }
}

impl<const N: usize> Sub for &Matrix<N> {
    type Output = Matrix<N>;
    fn sub(self, rhs: &Matrix<N>) -> Matrix<N> {
        Matrix(array::from_fn(|i| {
            array::from_fn(|j| &self.0[i][j] - &rhs.0[i][j])
        }))
    }
}

impl<const N: usize> Neg for &Matrix<N> {
    type Output = Matrix<N>;
    fn neg(self) -> Matrix<N> {
        Matrix(array::from_fn(|i| array::from_fn(|j| -&self.0[i][j])))
    }
}

impl<const N: usize> fmt::Display for Matrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter().map(RowText))
    }
}

struct RowText<'a, const N: usize>(&'a [Scalar; N]);

impl<const N: usize> fmt::Display for RowText<'_, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, self.0.iter())
    }
}
