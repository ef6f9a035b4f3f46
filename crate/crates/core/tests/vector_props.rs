use proptest::prelude::*;
use vecq_core::scalar::{Rational, Scalar};
use vecq_core::vector::{cross_matrix, Matrix, SquareMatrix, Vector, Vector2, Vector3};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-40i64..=40, 1i64..=9).prop_map(|(p, q)| Scalar::exact(Rational::new(p, q).unwrap()))
}

fn vec2() -> impl Strategy<Value = Vector2> {
    [scalar(), scalar()].prop_map(Vector::new)
}

fn vec3() -> impl Strategy<Value = Vector3> {
    [scalar(), scalar(), scalar()].prop_map(Vector::new)
}

fn mat<const N: usize>() -> impl Strategy<Value = Matrix<N>> {
    proptest::collection::vec(scalar(), N * N)
        .prop_map(|v| Matrix::from_fn(|i, j| v[i * N + j].clone()))
}

proptest! {
    #[test]
    fn dot_is_symmetric_and_bilinear(a in vec3(), b in vec3(), c in vec3(), k in scalar()) {
        prop_assert_eq!(a.dot(&b), b.dot(&a));
        prop_assert_eq!((&a + &b).dot(&c), &a.dot(&c) + &b.dot(&c));
        prop_assert_eq!(a.scale(&k).dot(&b), &k * &a.dot(&b));
    }

    #[test]
    fn cross_is_antisymmetric_and_orthogonal(a in vec3(), b in vec3()) {
        let c = a.cross(&b);
        prop_assert_eq!(b.cross(&a), -&c);
        prop_assert!(c.dot(&a).is_zero());
        prop_assert!(c.dot(&b).is_zero());
        prop_assert_eq!(cross_matrix(&a).mul_vec(&b), c);
    }

    #[test]
    fn lagrange_identity_3d(a in vec3(), b in vec3()) {
        let dot = a.dot(&b);
        prop_assert_eq!(&a.norm_sq() * &b.norm_sq(), &(&dot * &dot) + &a.cross(&b).norm_sq());
    }

    #[test]
    fn lagrange_identity_2d(a in vec2(), b in vec2()) {
        let dot = a.dot(&b);
        let w = a.perp_dot(&b);
        prop_assert_eq!(&a.norm_sq() * &b.norm_sq(), &(&dot * &dot) + &(&w * &w));
        prop_assert_eq!(b.perp_dot(&a), -&w);
    }

    #[test]
    fn det_is_multiplicative_2d(m in mat::<2>(), n in mat::<2>()) {
        prop_assert_eq!(m.mul_mat(&n).det(), &m.det() * &n.det());
        prop_assert_eq!(m.transpose().det(), m.det());
    }

    #[test]
    fn det_is_multiplicative_3d(m in mat::<3>(), n in mat::<3>()) {
        prop_assert_eq!(m.mul_mat(&n).det(), &m.det() * &n.det());
        prop_assert_eq!(m.transpose().det(), m.det());
    }

    #[test]
    fn inverse_is_two_sided(m in mat::<3>()) {
        match m.inverse() {
            Ok(inv) => {
                prop_assert_eq!(m.mul_mat(&inv), Matrix::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
                prop_assert_eq!(inv.mul_mat(&m), Matrix::from_ints([[1, 0, 0], [0, 1, 0], [0, 0, 1]]));
            }
            Err(_) => prop_assert!(m.det().is_zero()),
        }
    }

    #[test]
    fn matrix_powers_compose(m in mat::<2>(), p in -3i32..=3, q in -3i32..=3) {
        if let (Ok(x), Ok(y), Ok(z)) = (m.pow(p), m.pow(q), m.pow(p + q)) {
            prop_assert_eq!(x.mul_mat(&y), z);
        } else {
            prop_assert!(m.det().is_zero());
        }
    }

    #[test]
    fn float_vectors_track_exact(a in vec3(), b in vec3()) {
        let exact = a.cross(&b).to_f64();
        let approx = a.to_approx().cross(&b.to_approx()).to_f64();
        for (x, y) in exact.iter().zip(approx) {
            prop_assert!((x - y).abs() <= 1e-12 * x.abs().max(1.0));
        }
    }
}
