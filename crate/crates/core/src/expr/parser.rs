//! Recursive-descent parser.
//!
//! ```text
//! expr  := term (("+" | "-") term)* ;
//! term  := unary (("*" | "/" | "." | "x") unary)* ;
//! unary := "-" unary | power ;
//! power := atom ("^" "-"? integer)? ;
//! atom  := number
//!        | "[" expr ("," expr)+ "]"
//!        | "(" expr ")"
//!        | ident "(" expr ("," expr)* ")"
//!        | ident ;
//! ```
//!
//! `^` binds tighter than unary minus, so `-a^2` is `-(a^2)`. Vector literals
//! have two or three components, and exponents are nonzero integers.

use std::fmt;

use super::lexer::{tokenize, Token, TokenKind};
use super::{ErrorKind, ExprError};

/// Maximum nesting depth of an expression.
pub const MAX_DEPTH: usize = 200;

/// A parsed node and its height.
type Parsed = Result<(Expr, usize), ExprError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryOp {
    Add,
    Sub,
    Mul,
    Div,
    Dot,
    Cross,
}

impl BinaryOp {
    fn symbol(self) -> &'static str {
        match self {
            BinaryOp::Add => "+",
            BinaryOp::Sub => "-",
            BinaryOp::Mul => "*",
            BinaryOp::Div => "/",
            BinaryOp::Dot => ".",
            BinaryOp::Cross => "x",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Number(String),
    Vector(Vec<Expr>),
    Binary {
        op: BinaryOp,
        lhs: Box<Expr>,
        rhs: Box<Expr>,
    },
    Neg(Box<Expr>),
    Power {
        base: Box<Expr>,
        exponent: i32,
    },
    /// A bare identifier is a call with no arguments.
    Call {
        name: String,
        args: Vec<Expr>,
    },
}

/// A syntax node. `position` is the operator for binary and power nodes and
/// the first character otherwise; it does not take part in equality.
#[derive(Clone, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub position: usize,
}

impl PartialEq for Expr {
    fn eq(&self, other: &Expr) -> bool {
        self.kind == other.kind
    }
}

impl fmt::Display for Expr {
    /// Prints source that parses back to the same tree. Binary nodes are
    /// always parenthesized.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ExprKind::Number(text) => f.write_str(text),
            ExprKind::Vector(items) => {
                f.write_str("[")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str("]")
            }
            ExprKind::Binary { op, lhs, rhs } => write!(f, "({lhs} {} {rhs})", op.symbol()),
            ExprKind::Neg(inner) => write!(f, "-{inner}"),
            ExprKind::Power { base, exponent } => match base.kind {
                ExprKind::Number(_)
                | ExprKind::Vector(_)
                | ExprKind::Binary { .. }
                | ExprKind::Call { .. } => {
                    write!(f, "{base}^{exponent}")
                }
                _ => write!(f, "({base})^{exponent}"),
            },
            ExprKind::Call { name, args } if args.is_empty() => f.write_str(name),
            ExprKind::Call { name, args } => {
                write!(f, "{name}(")?;
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{arg}")?;
                }
                f.write_str(")")
            }
        }
    }
}

struct Parser<'t> {
    tokens: &'t [Token],
    next: usize,
    end: usize,
}

impl<'t> Parser<'t> {
    fn peek(&self) -> Option<&'t Token> {
        self.tokens.get(self.next)
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn bump(&mut self) -> &'t Token {
        let token = &self.tokens[self.next];
        self.next += 1;
        token
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |t| t.position)
    }

    fn error(&self, expected: &[&str]) -> ExprError {
        let found = match self.peek() {
            Some(t) if t.kind == TokenKind::Number || t.kind == TokenKind::Ident => {
                format!("'{}'", t.lexeme)
            }
            Some(t) => t.kind.to_string(),
            None => "end of input".to_string(),
        };
        let expected = expected.iter().map(|s| s.to_string()).collect();
        ExprError::new(ErrorKind::Parse { expected, found }, self.here())
    }

    fn expect(&mut self, kind: TokenKind) -> Result<&'t Token, ExprError> {
        if self.peek_kind() == Some(kind) {
            Ok(self.bump())
        } else {
            Err(self.error(&[&kind.to_string()]))
        }
    }

    fn check_depth(&self, depth: usize, position: usize) -> Result<(), ExprError> {
        if depth > MAX_DEPTH {
            Err(ExprError::new(ErrorKind::TooDeep, position))
        } else {
            Ok(())
        }
    }

    /// Each parse function returns the node with its height, and takes the
    /// depth at which it sits so that nesting is bounded from both sides.
    fn expr(&mut self, depth: usize) -> Parsed {
        let ops = |k| match k {
            TokenKind::Plus => Some(BinaryOp::Add),
            TokenKind::Minus => Some(BinaryOp::Sub),
            _ => None,
        };
        self.binary_chain(depth, ops, Self::term)
    }

    fn term(&mut self, depth: usize) -> Parsed {
        let ops = |k| match k {
            TokenKind::Star => Some(BinaryOp::Mul),
            TokenKind::Slash => Some(BinaryOp::Div),
            TokenKind::Dot => Some(BinaryOp::Dot),
            TokenKind::CrossKw => Some(BinaryOp::Cross),
            _ => None,
        };
        self.binary_chain(depth, ops, Self::unary)
    }

    fn binary_chain(
        &mut self,
        depth: usize,
        ops: impl Fn(TokenKind) -> Option<BinaryOp>,
        operand: fn(&mut Self, usize) -> Parsed,
    ) -> Parsed {
        let (mut lhs, mut height) = operand(self, depth)?;
        while let Some(op) = self.peek_kind().and_then(&ops) {
            let position = self.bump().position;
            let (rhs, rhs_height) = operand(self, depth + 1)?;
            height = height.max(rhs_height) + 1;
            self.check_depth(depth + height, position)?;
            lhs = Expr {
                kind: ExprKind::Binary {
                    op,
                    lhs: Box::new(lhs),
                    rhs: Box::new(rhs),
                },
                position,
            };
        }
        Ok((lhs, height))
    }

    fn unary(&mut self, depth: usize) -> Parsed {
        self.check_depth(depth, self.here())?;
        if self.peek_kind() == Some(TokenKind::Minus) {
            let position = self.bump().position;
            let (inner, height) = self.unary(depth + 1)?;
            return Ok((
                Expr {
                    kind: ExprKind::Neg(Box::new(inner)),
                    position,
                },
                height + 1,
            ));
        }
        self.power(depth)
    }

    fn power(&mut self, depth: usize) -> Parsed {
        let (base, height) = self.atom(depth)?;
        if self.peek_kind() != Some(TokenKind::Caret) {
            return Ok((base, height));
        }
        let position = self.bump().position;
        let negative = self.peek_kind() == Some(TokenKind::Minus);
        if negative {
            self.bump();
        }
        let exponent = match self.peek() {
            Some(t)
                if t.kind == TokenKind::Number && t.lexeme.bytes().all(|b| b.is_ascii_digit()) =>
            {
                t.lexeme.parse::<i32>().ok().filter(|&n| n != 0)
            }
            _ => None,
        };
        let Some(exponent) = exponent else {
            return Err(self.error(&["nonzero integer exponent"]));
        };
        self.bump();
        let exponent = if negative { -exponent } else { exponent };
        Ok((
            Expr {
                kind: ExprKind::Power {
                    base: Box::new(base),
                    exponent,
                },
                position,
            },
            height + 1,
        ))
    }

    fn atom(&mut self, depth: usize) -> Parsed {
        self.check_depth(depth, self.here())?;
        let Some(token) = self.peek() else {
            return Err(self.error(&["atom"]));
        };
        let position = token.position;
        match token.kind {
            TokenKind::Number => {
                self.bump();
                Ok((
                    Expr {
                        kind: ExprKind::Number(token.lexeme.clone()),
                        position,
                    },
                    1,
                ))
            }
            TokenKind::LBracket => {
                self.bump();
                let mut items = Vec::new();
                let mut height = 0;
                loop {
                    let (item, h) = self.expr(depth + 1)?;
                    items.push(item);
                    height = height.max(h);
                    match (items.len(), self.peek_kind()) {
                        (1, Some(TokenKind::Comma)) | (2, Some(TokenKind::Comma)) => {
                            self.bump();
                        }
                        (1, _) => return Err(self.error(&["','"])),
                        (2, Some(TokenKind::RBracket)) | (3, Some(TokenKind::RBracket)) => {
                            self.bump();
                            break;
                        }
                        (2, _) => return Err(self.error(&["','", "']'"])),
                        _ => return Err(self.error(&["']'"])),
                    }
                }
                Ok((
                    Expr {
                        kind: ExprKind::Vector(items),
                        position,
                    },
                    height + 1,
                ))
            }
            TokenKind::LParen => {
                self.bump();
                let (inner, height) = self.expr(depth + 1)?;
                self.expect(TokenKind::RParen)?;
                Ok((inner, height))
            }
            TokenKind::Ident => {
                self.bump();
                let name = token.lexeme.clone();
                let mut args = Vec::new();
                let mut height = 0;
                if self.peek_kind() == Some(TokenKind::LParen) {
                    self.bump();
                    loop {
                        let (arg, h) = self.expr(depth + 1)?;
                        args.push(arg);
                        height = height.max(h);
                        match self.peek_kind() {
                            Some(TokenKind::Comma) => {
                                self.bump();
                            }
                            Some(TokenKind::RParen) => {
                                self.bump();
                                break;
                            }
                            _ => return Err(self.error(&["','", "')'"])),
                        }
                    }
                }
                Ok((
                    Expr {
                        kind: ExprKind::Call { name, args },
                        position,
                    },
                    height + 1,
                ))
            }
            _ => Err(self.error(&["atom"])),
        }
    }
}

fn parse_with_end(tokens: &[Token], end: usize) -> Result<Expr, ExprError> {
    let mut parser = Parser {
        tokens,
        next: 0,
        end,
    };
    let (expr, _) = parser.expr(0)?;
    if parser.peek().is_some() {
        return Err(parser.error(&["operator", "end of input"]));
    }
    Ok(expr)
}

/// Parses a token stream. End-of-input errors point just past the last token.
pub fn parse(tokens: &[Token]) -> Result<Expr, ExprError> {
    let end = tokens
        .last()
        .map_or(0, |t| t.position + t.lexeme.chars().count());
    parse_with_end(tokens, end)
}

/// Tokenizes and parses; end-of-input errors point at the end of `source`.
pub fn parse_source(source: &str) -> Result<Expr, ExprError> {
    let tokens = tokenize(source)?;
    parse_with_end(&tokens, source.chars().count())
}
