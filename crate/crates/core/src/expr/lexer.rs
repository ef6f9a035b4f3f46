use std::fmt;

use super::ExprError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TokenKind {
    Number,
    LBracket,
    RBracket,
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Star,
    Slash,
    Dot,
    CrossKw,
    Caret,
    Ident,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = match self {
            TokenKind::Number => "number",
            TokenKind::LBracket => "'['",
            TokenKind::RBracket => "']'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Comma => "','",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Slash => "'/'",
            TokenKind::Dot => "'.'",
            TokenKind::CrossKw => "'x'",
            TokenKind::Caret => "'^'",
            TokenKind::Ident => "identifier",
        };
        f.write_str(text)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    /// Character offset of the first character.
    pub position: usize,
}

fn opens(c: Option<char>) -> bool {
    matches!(c, Some(c) if c.is_whitespace() || c == '[' || c == '(')
}

fn closes(c: Option<char>) -> bool {
    matches!(c, Some(c) if c.is_whitespace() || c == ']' || c == ')')
}

/// Splits `source` into tokens. Positions count characters, not bytes.
///
/// Numbers are unsigned integers or decimals (`12`, `0.25`); a `/` between
/// integers stays a separate token. A lone `x` is the cross operator when the
/// characters on both sides are whitespace or brackets, and an identifier
/// otherwise.
pub fn tokenize(source: &str) -> Result<Vec<Token>, ExprError> {
    let chars: Vec<char> = source.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let single = match c {
            '[' => Some(TokenKind::LBracket),
            ']' => Some(TokenKind::RBracket),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            ',' => Some(TokenKind::Comma),
            '+' => Some(TokenKind::Plus),
            '-' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '.' => Some(TokenKind::Dot),
            '^' => Some(TokenKind::Caret),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token {
                kind,
                lexeme: c.to_string(),
                position: start,
            });
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '.' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            let lexeme = chars[start..i].iter().collect();
            tokens.push(Token {
                kind: TokenKind::Number,
                lexeme,
                position: start,
            });
        } else if c.is_ascii_alphabetic() || c == '_' {
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let lexeme: String = chars[start..i].iter().collect();
            let before = start.checked_sub(1).map(|p| chars[p]);
            let after = chars.get(i).copied();
            let kind = if lexeme == "x" && closes(before) && opens(after) {
                TokenKind::CrossKw
            } else {
                TokenKind::Ident
            };
            tokens.push(Token {
                kind,
                lexeme,
                position: start,
            });
        } else {
            return Err(ExprError::lex(start, c));
        }
    }
    Ok(tokens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use TokenKind::*;

    fn kinds(src: &str) -> Vec<TokenKind> {
        tokenize(src).unwrap().into_iter().map(|t| t.kind).collect()
    }

    #[test]
    fn segments_a_division() {
        assert_eq!(
            kinds("[3,-1] / [2,5]"),
            vec![
                LBracket, Number, Comma, Minus, Number, RBracket, Slash, LBracket, Number, Comma,
                Number, RBracket
            ]
        );
    }

    #[test]
    fn fraction_is_three_tokens() {
        let toks = tokenize("1/29").unwrap();
        assert_eq!(
            toks.iter().map(|t| t.kind).collect::<Vec<_>>(),
            vec![Number, Slash, Number]
        );
        assert_eq!(toks[2].lexeme, "29");
        assert_eq!(toks[2].position, 2);
    }

    #[test]
    fn unknown_symbol_is_a_lex_error() {
        let err = tokenize("[1,2] ⊕ [3,4]").unwrap_err();
        assert_eq!(err.position(), 6);
        assert_eq!(err.to_string(), "lex error: unexpected character '⊕'");
    }

    #[test]
    fn decimals_and_dots() {
        assert_eq!(kinds("1.25"), vec![Number]);
        assert_eq!(kinds("[1,2].[3,4]")[5], Dot);
        assert_eq!(kinds("2."), vec![Number, Dot]);
    }

    #[test]
    fn cross_keyword_needs_separators() {
        assert_eq!(kinds("[1,0,0] x [0,1,0]")[7], CrossKw);
        assert_eq!(kinds("[1,0,0]x[0,1,0]")[7], CrossKw);
        assert_eq!(kinds("x"), vec![Ident]);
        assert_eq!(kinds("xy"), vec![Ident]);
        assert_eq!(kinds("(a)x(b)")[3], CrossKw);
        assert_eq!(kinds("2 x"), vec![Number, Ident]);
    }

    #[test]
    fn positions_increase() {
        let toks = tokenize(" inv( [2, 5] )^-1 ").unwrap();
        assert!(toks.windows(2).all(|w| w[0].position < w[1].position));
        assert_eq!(toks[0].position, 1);
    }
}
