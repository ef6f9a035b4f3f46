use serde::Serialize;

use crate::scalar::{format_decimal, Mode, Scalar};
use crate::vector::{Matrix2, Matrix3, Vector2, Vector3};

/// Result of evaluating an expression.
#[derive(Clone, Debug, PartialEq)]
#[allow(clippy::large_enum_variant)]
pub enum Value {
    Scalar(Scalar),
    Vector2(Vector2),
    Vector3(Vector3),
    Matrix2(Matrix2),
    Matrix3(Matrix3),
}

fn scalar_text(s: &Scalar, precision: usize) -> String {
    match s.as_rational() {
        Some(r) => r.to_string(),
        None => format_decimal(s.to_f64(), precision),
    }
}

fn list(items: impl Iterator<Item = String>) -> String {
    format!("[{}]", items.collect::<Vec<_>>().join(", "))
}

impl Value {
    pub fn type_name(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Vector2(_) => "2D vector",
            Value::Vector3(_) => "3D vector",
            Value::Matrix2(_) => "2x2 matrix",
            Value::Matrix3(_) => "3x3 matrix",
        }
    }

    fn scalars(&self) -> Vec<&Scalar> {
        match self {
            Value::Scalar(s) => vec![s],
            Value::Vector2(v) => v.components().iter().collect(),
            Value::Vector3(v) => v.components().iter().collect(),
            Value::Matrix2(m) => m.rows().iter().flatten().collect(),
            Value::Matrix3(m) => m.rows().iter().flatten().collect(),
        }
    }

    pub fn mode(&self) -> Mode {
        self.scalars()
            .into_iter()
            .fold(Mode::Exact, |m, s| m.join(s.mode()))
    }

    pub fn is_finite(&self) -> bool {
        self.scalars().into_iter().all(Scalar::is_finite)
    }

    fn component_texts(&self, precision: usize) -> Vec<String> {
        self.scalars()
            .into_iter()
            .map(|s| scalar_text(s, precision))
            .collect()
    }

    fn rows(&self, precision: usize) -> Option<Vec<Vec<String>>> {
        let dim = match self {
            Value::Matrix2(_) => 2,
            Value::Matrix3(_) => 3,
            _ => return None,
        };
        Some(
            self.component_texts(precision)
                .chunks(dim)
                .map(<[String]>::to_vec)
                .collect(),
        )
    }

    /// Canonical text: rationals as `p/q`, floats with `precision` decimals,
    /// vectors as `[x, y]`, matrices as lists of rows.
    pub fn render(&self, precision: usize) -> String {
        match self {
            Value::Scalar(s) => scalar_text(s, precision),
            Value::Vector2(_) | Value::Vector3(_) => {
                list(self.component_texts(precision).into_iter())
            }
            Value::Matrix2(_) | Value::Matrix3(_) => {
                let rows = self.rows(precision).unwrap_or_default();
                list(rows.into_iter().map(|r| list(r.into_iter())))
            }
        }
    }

    pub fn to_json(&self, precision: usize) -> JsonValue {
        let mode = match self.mode() {
            Mode::Exact => "exact",
            Mode::Approx => "float",
        };
        let mut out = JsonValue {
            kind: "scalar",
            dim: None,
            mode,
            entries: None,
            components: None,
            value: None,
        };
        match self {
            Value::Scalar(s) => out.value = Some(scalar_text(s, precision)),
            Value::Vector2(_) | Value::Vector3(_) => {
                out.kind = "vector";
                out.dim = Some(if matches!(self, Value::Vector2(_)) {
                    2
                } else {
                    3
                });
                out.components = Some(self.component_texts(precision));
            }
            Value::Matrix2(_) | Value::Matrix3(_) => {
                out.kind = "matrix";
                out.dim = Some(if matches!(self, Value::Matrix2(_)) {
                    2
                } else {
                    3
                });
                out.entries = self.rows(precision);
            }
        }
        out
    }
}

impl std::fmt::Display for Value {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render(12))
    }
}

/// JSON form of a [`Value`]. Numbers are strings in both modes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JsonValue {
    #[serde(rename = "type")]
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub entries: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub components: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
}
