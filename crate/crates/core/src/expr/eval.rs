use num_bigint::BigInt;

use super::parser::{BinaryOp, Expr, ExprKind};
use super::value::Value;
use super::{ErrorKind, ExprError};
use crate::algebra::{
    axis_of, decompose_2d, decompose_3d, diagnostics, divide, identity_element, inverse, multiply,
    perp_2d, Orientation,
};
use crate::error::MathError;
use crate::scalar::{Mode, Rational, Scalar};
use crate::vector::{Matrix, SquareMatrix, Vector};

/// Evaluates a parsed expression; number literals take the given mode.
pub fn evaluate(expr: &Expr, mode: Mode) -> Result<Value, ExprError> {
    let value = eval(expr, mode)?;
    if !value.is_finite() {
        return Err(ExprError::math(expr.position, MathError::NonFinite));
    }
    Ok(value)
}

fn number(text: &str, mode: Mode, position: usize) -> Result<Scalar, ExprError> {
    match mode {
        Mode::Approx => {
            let value: f64 = text.parse().expect("lexer produces decimal digits");
            Scalar::approx(value).map_err(|e| ExprError::math(position, e))
        }
        Mode::Exact => {
            let (int, frac) = text.split_once('.').unwrap_or((text, ""));
            let digits: BigInt = format!("{int}{frac}")
                .parse()
                .expect("lexer produces decimal digits");
            let scale = num_traits::pow(BigInt::from(10), frac.len());
            Ok(Scalar::exact(
                Rational::new(digits, scale).expect("power of ten is nonzero"),
            ))
        }
    }
}

fn mismatch(position: usize, lhs: &Value, rhs: &Value) -> ExprError {
    ExprError::new(
        ErrorKind::DimensionMismatch(format!("{} and {}", lhs.type_name(), rhs.type_name())),
        position,
    )
}

fn dims_differ(lhs: &Value, rhs: &Value) -> bool {
    let dim = |v: &Value| match v {
        Value::Vector2(_) | Value::Matrix2(_) => Some(2),
        Value::Vector3(_) | Value::Matrix3(_) => Some(3),
        Value::Scalar(_) => None,
    };
    matches!((dim(lhs), dim(rhs)), (Some(a), Some(b)) if a != b)
}

fn unsupported(op: BinaryOp, position: usize, lhs: &Value, rhs: &Value) -> ExprError {
    if dims_differ(lhs, rhs) {
        return mismatch(position, lhs, rhs);
    }
    let verb = match op {
        BinaryOp::Add => "add",
        BinaryOp::Sub => "subtract",
        BinaryOp::Mul => "multiply",
        BinaryOp::Div => "divide",
        BinaryOp::Dot => "take dot product of",
        BinaryOp::Cross => "take cross product of",
    };
    let joiner = match op {
        BinaryOp::Add => "to",
        BinaryOp::Sub => "from",
        BinaryOp::Div => "by",
        _ => "and",
    };
    let (first, second) = if op == BinaryOp::Sub {
        (rhs, lhs)
    } else {
        (lhs, rhs)
    };
    ExprError::type_error(
        position,
        format!(
            "cannot {verb} {} {joiner} {}",
            first.type_name(),
            second.type_name()
        ),
    )
}

fn eval(expr: &Expr, mode: Mode) -> Result<Value, ExprError> {
    match &expr.kind {
        ExprKind::Number(text) => Ok(Value::Scalar(number(text, mode, expr.position)?)),
        ExprKind::Vector(items) => {
            let mut scalars = Vec::with_capacity(items.len());
            for item in items {
                match eval(item, mode)? {
                    Value::Scalar(s) => scalars.push(s),
                    other => {
                        return Err(ExprError::type_error(
                            item.position,
                            format!(
                                "vector components must be scalars, found {}",
                                other.type_name()
                            ),
                        ))
                    }
                }
            }
            Ok(match <[Scalar; 2]>::try_from(scalars) {
                Ok(pair) => Value::Vector2(Vector::new(pair)),
                Err(scalars) => Value::Vector3(Vector::new(
                    <[Scalar; 3]>::try_from(scalars).expect("parser admits 2 or 3 components"),
                )),
            })
        }
        ExprKind::Binary { op, lhs, rhs } => {
            let left = eval(lhs, mode)?;
            let right = eval(rhs, mode)?;
            binary(*op, left, right, expr.position, rhs.position)
        }
        ExprKind::Neg(inner) => Ok(match eval(inner, mode)? {
            Value::Scalar(s) => Value::Scalar(-s),
            Value::Vector2(v) => Value::Vector2(-&v),
            Value::Vector3(v) => Value::Vector3(-&v),
            Value::Matrix2(m) => Value::Matrix2(-&m),
            Value::Matrix3(m) => Value::Matrix3(-&m),
        }),
        ExprKind::Power { base, exponent } => power(eval(base, mode)?, *exponent, expr.position),
        ExprKind::Call { name, args } => {
            let values = args
                .iter()
                .map(|a| eval(a, mode))
                .collect::<Result<Vec<_>, _>>()?;
            call(name, values, mode, expr.position, args)
        }
    }
}

fn binary(
    op: BinaryOp,
    lhs: Value,
    rhs: Value,
    position: usize,
    rhs_position: usize,
) -> Result<Value, ExprError> {
    use Value::*;
    let math = |e: MathError| ExprError::math(rhs_position, e);
    let value = match (op, &lhs, &rhs) {
        (BinaryOp::Add, Scalar(a), Scalar(b)) => Scalar(a + b),
        (BinaryOp::Add, Vector2(a), Vector2(b)) => Vector2(a + b),
        (BinaryOp::Add, Vector3(a), Vector3(b)) => Vector3(a + b),
        (BinaryOp::Add, Matrix2(a), Matrix2(b)) => Matrix2(a + b),
        (BinaryOp::Add, Matrix3(a), Matrix3(b)) => Matrix3(a + b),
        (BinaryOp::Sub, Scalar(a), Scalar(b)) => Scalar(a - b),
        (BinaryOp::Sub, Vector2(a), Vector2(b)) => Vector2(a - b),
        (BinaryOp::Sub, Vector3(a), Vector3(b)) => Vector3(a - b),
        (BinaryOp::Sub, Matrix2(a), Matrix2(b)) => Matrix2(a - b),
        (BinaryOp::Sub, Matrix3(a), Matrix3(b)) => Matrix3(a - b),

        (BinaryOp::Mul, Scalar(a), Scalar(b)) => Scalar(a * b),
        (BinaryOp::Mul, Scalar(k), Vector2(v)) | (BinaryOp::Mul, Vector2(v), Scalar(k)) => {
            Vector2(v.scale(k))
        }
        (BinaryOp::Mul, Scalar(k), Vector3(v)) | (BinaryOp::Mul, Vector3(v), Scalar(k)) => {
            Vector3(v.scale(k))
        }
        (BinaryOp::Mul, Scalar(k), Matrix2(m)) | (BinaryOp::Mul, Matrix2(m), Scalar(k)) => {
            Matrix2(m.scale(k))
        }
        (BinaryOp::Mul, Scalar(k), Matrix3(m)) | (BinaryOp::Mul, Matrix3(m), Scalar(k)) => {
            Matrix3(m.scale(k))
        }
        (BinaryOp::Mul, Vector2(a), Vector2(b)) => Matrix2(multiply(a, b).into_matrix()),
        (BinaryOp::Mul, Vector3(a), Vector3(b)) => Matrix3(multiply(a, b).into_matrix()),
        (BinaryOp::Mul, Matrix2(m), Vector2(v)) => Vector2(m.mul_vec(v)),
        (BinaryOp::Mul, Matrix3(m), Vector3(v)) => Vector3(m.mul_vec(v)),
        (BinaryOp::Mul, Matrix2(a), Matrix2(b)) => Matrix2(a.mul_mat(b)),
        (BinaryOp::Mul, Matrix3(a), Matrix3(b)) => Matrix3(a.mul_mat(b)),

        (BinaryOp::Div, Scalar(a), Scalar(b)) => Scalar(a.checked_div(b).map_err(math)?),
        (BinaryOp::Div, Vector2(v), Scalar(k)) => Vector2(v.checked_div_scalar(k).map_err(math)?),
        (BinaryOp::Div, Vector3(v), Scalar(k)) => Vector3(v.checked_div_scalar(k).map_err(math)?),
        (BinaryOp::Div, Matrix2(m), Scalar(k)) => Matrix2(m.scale(&k.recip().map_err(math)?)),
        (BinaryOp::Div, Matrix3(m), Scalar(k)) => Matrix3(m.scale(&k.recip().map_err(math)?)),
        (BinaryOp::Div, Vector2(a), Vector2(b)) => {
            Matrix2(divide(a, b).map_err(math)?.into_matrix())
        }
        (BinaryOp::Div, Vector3(a), Vector3(b)) => {
            Matrix3(divide(a, b).map_err(math)?.into_matrix())
        }

        (BinaryOp::Dot, Vector2(a), Vector2(b)) => Scalar(a.dot(b)),
        (BinaryOp::Dot, Vector3(a), Vector3(b)) => Scalar(a.dot(b)),
        // standard 2D cross product, the negative of perp_dot
        (BinaryOp::Cross, Vector2(a), Vector2(b)) => Scalar(-a.perp_dot(b)),
        (BinaryOp::Cross, Vector3(a), Vector3(b)) => Vector3(a.cross(b)),
        _ => return Err(unsupported(op, position, &lhs, &rhs)),
    };
    Ok(value)
}

fn power(base: Value, exponent: i32, position: usize) -> Result<Value, ExprError> {
    let math = |e: MathError| ExprError::math(position, e);
    Ok(match base {
        Value::Scalar(s) => Value::Scalar(s.pow(exponent).map_err(math)?),
        Value::Vector2(v) if exponent == -1 => Value::Vector2(inverse(&v).map_err(math)?),
        Value::Vector3(v) if exponent == -1 => Value::Vector3(inverse(&v).map_err(math)?),
        Value::Matrix2(m) => Value::Matrix2(m.pow(exponent).map_err(math)?),
        Value::Matrix3(m) => Value::Matrix3(m.pow(exponent).map_err(math)?),
        other => {
            return Err(ExprError::type_error(
                position,
                format!("{} supports only the exponent -1", other.type_name()),
            ))
        }
    })
}

const FUNCTIONS: &[(&str, usize)] = &[
    ("I2", 0),
    ("I3", 0),
    ("inv", 1),
    ("det", 1),
    ("transpose", 1),
    ("unit", 1),
    ("norm", 1),
    ("normsq", 1),
    ("sqrt", 1),
    ("perp", 1),
    ("dot", 2),
    ("cross", 2),
    ("div", 2),
    ("mul", 2),
    ("axis", 2),
    ("angle", 2),
    ("alpha", 2),
    ("beta", 2),
];

fn call(
    name: &str,
    args: Vec<Value>,
    mode: Mode,
    position: usize,
    arg_nodes: &[Expr],
) -> Result<Value, ExprError> {
    let Some(&(_, arity)) = FUNCTIONS.iter().find(|(n, _)| *n == name) else {
        let what = if arg_nodes.is_empty() {
            "identifier"
        } else {
            "function"
        };
        return Err(ExprError::type_error(
            position,
            format!("unknown {what} '{name}'"),
        ));
    };
    if args.len() != arity {
        let plural = if arity == 1 { "" } else { "s" };
        return Err(ExprError::type_error(
            position,
            format!(
                "'{name}' takes {arity} argument{plural}, got {}",
                args.len()
            ),
        ));
    }
    let math = |e: MathError| ExprError::math(arg_nodes.last().map_or(position, |a| a.position), e);
    let bad_arg = |v: &Value| {
        ExprError::type_error(
            position,
            format!("'{name}' is not defined for {}", v.type_name()),
        )
    };
    let mut args = args.into_iter();
    let mut next = || args.next().expect("arity checked");

    let value = match name {
        "I2" => Value::Matrix2(Matrix::identity(mode)),
        "I3" => Value::Matrix3(Matrix::identity(mode)),
        "inv" => power(next(), -1, arg_nodes[0].position)?,
        "det" => match next() {
            Value::Matrix2(m) => Value::Scalar(m.det()),
            Value::Matrix3(m) => Value::Scalar(m.det()),
            v => return Err(bad_arg(&v)),
        },
        "transpose" => match next() {
            Value::Matrix2(m) => Value::Matrix2(m.transpose()),
            Value::Matrix3(m) => Value::Matrix3(m.transpose()),
            v => return Err(bad_arg(&v)),
        },
        "unit" => match next() {
            Value::Vector2(v) => Value::Vector2(identity_element(&v).map_err(math)?),
            Value::Vector3(v) => Value::Vector3(identity_element(&v).map_err(math)?),
            v => return Err(bad_arg(&v)),
        },
        "norm" | "normsq" => {
            let sq = match next() {
                Value::Vector2(v) => v.norm_sq(),
                Value::Vector3(v) => v.norm_sq(),
                v => return Err(bad_arg(&v)),
            };
            Value::Scalar(if name == "norm" {
                sq.sqrt().map_err(math)?
            } else {
                sq
            })
        }
        "sqrt" => match next() {
            Value::Scalar(s) => Value::Scalar(s.sqrt().map_err(math)?),
            v => return Err(bad_arg(&v)),
        },
        "perp" => match next() {
            Value::Vector2(v) => Value::Vector2(perp_2d(&v, Orientation::Ccw)),
            v => return Err(bad_arg(&v)),
        },
        "dot" | "cross" | "div" | "mul" => {
            let op = match name {
                "dot" => BinaryOp::Dot,
                "cross" => BinaryOp::Cross,
                "div" => BinaryOp::Div,
                _ => BinaryOp::Mul,
            };
            let (lhs, rhs) = (next(), next());
            binary(op, lhs, rhs, position, arg_nodes[1].position)?
        }
        "axis" => match (next(), next()) {
            (Value::Vector3(a), Value::Vector3(b)) => {
                Value::Vector3(axis_of(&a, &b).map_err(math)?)
            }
            (a, b) => return Err(pair_error(name, position, &a, &b)),
        },
        "angle" => {
            let theta = match (next(), next()) {
                (Value::Vector2(a), Value::Vector2(b)) => diagnostics(&a, &b).map_err(math)?.theta,
                (Value::Vector3(a), Value::Vector3(b)) => diagnostics(&a, &b).map_err(math)?.theta,
                (a, b) => return Err(pair_error(name, position, &a, &b)),
            };
            Value::Scalar(Scalar::approx(theta).map_err(math)?)
        }
        "alpha" | "beta" => {
            let d = match (next(), next()) {
                (Value::Vector2(a), Value::Vector2(b)) => {
                    let d = decompose_2d(&a, &b, Orientation::Ccw).map_err(math)?;
                    (d.alpha, d.beta)
                }
                (Value::Vector3(a), Value::Vector3(b)) => {
                    let d = decompose_3d(&a, &b).map_err(math)?;
                    (d.alpha, d.beta)
                }
                (a, b) => return Err(pair_error(name, position, &a, &b)),
            };
            Value::Scalar(if name == "alpha" { d.0 } else { d.1 })
        }
        _ => unreachable!("function table and dispatch agree"),
    };
    Ok(value)
}

fn pair_error(name: &str, position: usize, a: &Value, b: &Value) -> ExprError {
    if dims_differ(a, b) {
        return mismatch(position, a, b);
    }
    ExprError::type_error(
        position,
        format!(
            "'{name}' is not defined for {} and {}",
            a.type_name(),
            b.type_name()
        ),
    )
}
