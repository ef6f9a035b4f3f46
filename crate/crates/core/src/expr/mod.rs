//! A small typed expression language over scalars, vectors and matrices.
//!
//! `a / b` and `a * b` on vectors are the quotient and product matrices,
//! `.` is the dot product, `x` the cross product, and `v^-1` the inverse
//! vector. See [`parser`] for the grammar.

mod eval;
pub mod lexer;
pub mod parser;
mod value;

use std::fmt;

pub use eval::evaluate;
pub use lexer::{tokenize, Token, TokenKind};
pub use parser::{parse, parse_source, BinaryOp, Expr, ExprKind};
pub use value::{JsonValue, Value};

use crate::error::MathError;
use crate::scalar::Mode;

/// Broad category of an expression error; the CLI maps each to an exit code.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorClass {
    Lex,
    Parse,
    Type,
    Math,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    Lex {
        found: char,
    },
    Parse {
        expected: Vec<String>,
        found: String,
    },
    TooDeep,
    Type(String),
    DimensionMismatch(String),
    Math(MathError),
}

/// An error with the character offset it refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprError {
    pub kind: ErrorKind,
    position: usize,
}

impl ExprError {
    pub fn new(kind: ErrorKind, position: usize) -> Self {
        ExprError { kind, position }
    }

    pub(crate) fn lex(position: usize, found: char) -> Self {
        ExprError::new(ErrorKind::Lex { found }, position)
    }

    pub(crate) fn type_error(position: usize, message: impl Into<String>) -> Self {
        ExprError::new(ErrorKind::Type(message.into()), position)
    }

    pub(crate) fn math(position: usize, err: MathError) -> Self {
        ExprError::new(ErrorKind::Math(err), position)
    }

    pub fn position(&self) -> usize {
        self.position
    }

    pub fn class(&self) -> ErrorClass {
        match self.kind {
            ErrorKind::Lex { .. } => ErrorClass::Lex,
            ErrorKind::Parse { .. } | ErrorKind::TooDeep => ErrorClass::Parse,
            ErrorKind::Type(_) | ErrorKind::DimensionMismatch(_) => ErrorClass::Type,
            ErrorKind::Math(_) => ErrorClass::Math,
        }
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ErrorKind::Lex { found } => write!(f, "lex error: unexpected character '{found}'"),
            ErrorKind::Parse { expected, found } => {
                write!(
                    f,
                    "parse error: expected {}, found {found}",
                    expected.join(" or ")
                )
            }
            ErrorKind::TooDeep => f.write_str("parse error: expression nested too deeply"),
            ErrorKind::Type(msg) => write!(f, "type error: {msg}"),
            ErrorKind::DimensionMismatch(msg) => write!(f, "type error: dimension mismatch: {msg}"),
            ErrorKind::Math(err) => write!(f, "math error: {err}"),
        }
    }
}

impl std::error::Error for ExprError {}

/// Tokenizes, parses and evaluates `source`.
pub fn eval_str(source: &str, mode: Mode) -> Result<Value, ExprError> {
    evaluate(&parse_source(source)?, mode)
}
