//! Recursive-descent parser for polynomial expressions.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := ['-'] factor ('*' factor)*
//! factor := base ('^' natural)?
//! base   := natural | identifier | '(' expr ')'
//! ```
//!
//! A leading `-` is only accepted on the first term of an expression (at the
//! start of the input or right after `(`), so `x - -1` is rejected. The
//! Unicode minus sign `−` is read as `-`.

use std::str::FromStr;

use num_bigint::BigUint;
use thiserror::Error;
use vanideal_core::Polynomial;

use crate::context::RingContext;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable {name:?} at byte {offset}")]
    UnknownVariable { offset: usize, name: String },
    #[error("exponent {value} at byte {offset} exceeds {MAX_EXPONENT}")]
    ExponentOverflow { offset: usize, value: String },
}

impl ParseError {
    /// Byte offset into the input where the problem was detected.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::UnknownVariable { offset, .. }
            | ParseError::ExponentOverflow { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(s) => format!("number {s}"),
            Tok::Ident(s) => format!("identifier {s:?}"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
            Tok::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some(&(pos, c)) = chars.peek() {
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' | '\u{2212}' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            chars.next();
            out.push((pos, tok));
            continue;
        }
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        let mut end = pos;
        let kind: fn(char) -> bool = if c.is_ascii_digit() {
            |c| c.is_ascii_digit()
        } else if c.is_ascii_alphabetic() {
            |c| c.is_ascii_alphanumeric() || c == '_'
        } else {
            return Err(ParseError::Syntax {
                offset: pos,
                message: format!("unexpected character {c:?}"),
            });
        };
        while let Some(&(p, c)) = chars.peek() {
            if !kind(c) {
                break;
            }
            end = p + c.len_utf8();
            chars.next();
        }
        let word = text[pos..end].to_string();
        out.push((
            pos,
            if c.is_ascii_digit() {
                Tok::Num(word)
            } else {
                Tok::Ident(word)
            },
        ));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser<'a> {
    ctx: &'a RingContext,
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let tok = self.toks[self.pos].1.clone();
        if tok != Tok::End {
            self.pos += 1;
        }
        tok
    }

    fn unexpected(&self, wanted: &str) -> ParseError {
        ParseError::Syntax {
            offset: self.offset(),
            message: format!("expected {wanted}, found {}", self.peek().describe()),
        }
    }

    fn expr(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = if *self.peek() == Tok::Minus {
            self.bump();
            self.product()?.negate()
        } else {
            self.product()?
        };
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = &acc + &self.product()?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = &acc - &self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Polynomial, ParseError> {
        let mut acc = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Polynomial, ParseError> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let offset = self.offset();
        let Tok::Num(digits) = self.peek().clone() else {
            return Err(self.unexpected("an exponent"));
        };
        self.bump();
        match digits.parse::<u64>() {
            Ok(k) if k <= MAX_EXPONENT => Ok(base.pow(k)),
            _ => Err(ParseError::ExponentOverflow { offset, value: digits }),
        }
    }

    fn base(&mut self) -> Result<Polynomial, ParseError> {
        let offset = self.offset();
        match self.peek().clone() {
            Tok::Num(digits) => {
                self.bump();
                let value = BigUint::from_str(&digits).expect("tokenizer yields decimal digits");
                Ok(Polynomial::constant(self.ctx.modulus(), self.ctx.nvars(), value))
            }
            Tok::Ident(name) => {
                self.bump();
                let i = self
                    .ctx
                    .index_of(&name)
                    .ok_or(ParseError::UnknownVariable { offset, name })?;
                Ok(Polynomial::variable(self.ctx.modulus(), self.ctx.nvars(), i).expect("index is in range"))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.unexpected("')'"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.unexpected("a number, variable or '('")),
        }
    }
}

/// Parses `text` into a polynomial over `ctx`; integer literals of any size
/// are reduced mod `m`.
pub fn parse_poly(text: &str, ctx: &RingContext) -> Result<Polynomial, ParseError> {
    let mut parser = Parser {
        ctx,
        toks: tokenize(text)?,
        pos: 0,
    };
    let poly = parser.expr()?;
    if *parser.peek() != Tok::End {
        return Err(parser.unexpected("an operator or end of input"));
    }
    Ok(poly)
}

#[cfg(test)]
mod tests {
    use super::*;
    use vanideal_core::{ExponentVector, Modulus};

    fn ctx(m: u64, vars: &str) -> RingContext {
        RingContext::from_var_list(Modulus::from_u64(m).unwrap(), vars).unwrap()
    }

    fn poly(c: &RingContext, terms: &[(&[u32], u64)]) -> Polynomial {
        Polynomial::from_terms(
            c.modulus(),
            c.nvars(),
            terms
                .iter()
                .map(|(e, k)| (ExponentVector::new(e.to_vec()), BigUint::from(*k))),
        )
        .unwrap()
    }

    #[test]
    fn expands_and_reduces() {
        let c = ctx(6, "x");
        assert_eq!(
            parse_poly("(x-1)*(x-2)", &c).unwrap(),
            poly(&c, &[(&[2], 1), (&[1], 3), (&[0], 2)])
        );
        assert_eq!(
            parse_poly("3*x^2 + 9*x", &c).unwrap(),
            poly(&c, &[(&[2], 3), (&[1], 3)])
        );
        assert!(parse_poly("0", &c).unwrap().is_zero());
        assert!(parse_poly("  6 * x ", &c).unwrap().is_zero());
    }

    #[test]
    fn precedence_and_grouping() {
        let c = ctx(97, "x, y");
        let lhs = parse_poly("2*x^2*y + -0 - (x - y)^2", &c);
        assert!(lhs.is_err());
        let f = parse_poly("2*x^2*y - (x - y)^2", &c).unwrap();
        let g = parse_poly("2*x^2*y - x^2 + 2*x*y - y^2", &c).unwrap();
        assert_eq!(f, g);
        assert_eq!(parse_poly("-x + 1", &c).unwrap(), parse_poly("1 - x", &c).unwrap());
        assert_eq!(parse_poly("(-x)^2", &c).unwrap(), parse_poly("x^2", &c).unwrap());
        assert_eq!(
            parse_poly("x \u{2212} 1", &c).unwrap(),
            parse_poly("x - 1", &c).unwrap()
        );
        assert_eq!(parse_poly("x^0", &c).unwrap(), parse_poly("1", &c).unwrap());
    }

    #[test]
    fn huge_literals_are_reduced() {
        let c = ctx(1 << 32, "x");
        let f = parse_poly("18446744073709551621*x + 340282366920938463463374607431768211457", &c).unwrap();
        assert_eq!(f, poly(&c, &[(&[1], 5), (&[0], 1)]));
    }

    #[test]
    fn errors_carry_offsets() {
        let c = ctx(6, "x,y");
        let cases: &[(&str, usize)] = &[
            ("x - -1", 4),
            ("x + ", 4),
            ("(x + 1", 6),
            ("x + 1)", 5),
            ("x^", 2),
            ("x^y", 2),
            ("2x", 1),
            ("x y", 2),
            ("x ** 2", 3),
            ("x^2^3", 3),
            ("", 0),
            ("()", 1),
            ("x + $", 4),
            ("x^-1", 2),
            ("x # y", 2),
        ];
        for &(text, offset) in cases {
            let err = parse_poly(text, &c).unwrap_err();
            assert!(matches!(err, ParseError::Syntax { .. }), "{text:?}: {err}");
            assert_eq!(err.offset(), offset, "{text:?}: {err}");
        }
        assert_eq!(
            parse_poly("x + z", &c).unwrap_err(),
            ParseError::UnknownVariable {
                offset: 4,
                name: "z".into()
            }
        );
        assert_eq!(parse_poly("x^1000001", &c).unwrap_err().offset(), 2);
        assert!(matches!(
            parse_poly("x^99999999999999999999999", &c).unwrap_err(),
            ParseError::ExponentOverflow { .. }
        ));
        assert!(parse_poly("x^1000000", &ctx(2, "x")).is_ok());
    }

    #[test]
    fn offsets_count_bytes_not_chars() {
        let c = ctx(6, "x");
        // U+2212 is three bytes
        assert_eq!(parse_poly("\u{2212}x + ?", &c).unwrap_err().offset(), 7);
    }
}
