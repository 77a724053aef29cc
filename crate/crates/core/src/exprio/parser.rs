//! Recursive-descent parser for the expression language.
//!
//! ```text
//! expr     := ['-'] term (('+' | '-') term)*
//! term     := factor (('*' | '/') factor)*
//! factor   := primary ('^' exponent)?
//! exponent := ['-'] INT ('^' ['-'] INT)*      right-associative
//! primary  := INT | 'q' | generator | '(' expr ')'
//! ```
//!
//! Multiplication is always explicit. Division is only by scalars.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use thiserror::Error;

use super::ast::{NCExpr, PowError};
use crate::ncore::{GenSymbol, Presentation};
use crate::qfield::{Rational, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{kind} at position {position}")]
pub struct ParseError {
    /// 1-based character index of the offending input.
    pub position: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("unexpected character '{0}'")]
    UnexpectedChar(char),
    #[error("expected {expected}, found {found}")]
    Unexpected { expected: &'static str, found: String },
    #[error("unexpected end of input, expected {0}")]
    UnexpectedEnd(&'static str),
    #[error("unknown symbol '{symbol}' for the {presentation} presentation")]
    UnknownSymbol { symbol: String, presentation: Presentation },
    #[error("negative power of non-invertible generator or expression")]
    NegativePower,
    #[error("division by a non-scalar expression")]
    NonScalarDivisor,
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent is not an integer")]
    NonIntegerExponent,
    #[error("integer exponent out of range")]
    ExponentOverflow,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Int(n) => format!("'{n}'"),
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Plus => "'+'".into(),
            Tok::Minus => "'-'".into(),
            Tok::Star => "'*'".into(),
            Tok::Slash => "'/'".into(),
            Tok::Caret => "'^'".into(),
            Tok::LParen => "'('".into(),
            Tok::RParen => "')'".into(),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let pos = i + 1;
        let single = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(t) = single {
            out.push((pos, t));
            i += 1;
        } else if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let digits: String = chars[start..i].iter().collect();
            out.push((pos, Tok::Int(digits.parse().expect("ascii digits"))));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((pos, Tok::Ident(chars[start..i].iter().collect())));
        } else {
            return Err(ParseError {
                position: pos,
                kind: ParseErrorKind::UnexpectedChar(c),
            });
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    idx: usize,
    presentation: Presentation,
    end_pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end_pos, |(p, _)| *p)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.idx).cloned();
        self.idx += 1;
        t
    }

    fn err<T>(&self, position: usize, kind: ParseErrorKind) -> Result<T, ParseError> {
        Err(ParseError { position, kind })
    }

    fn unexpected<T>(&self, expected: &'static str) -> Result<T, ParseError> {
        match self.peek() {
            Some(t) => self.err(
                self.pos(),
                ParseErrorKind::Unexpected {
                    expected,
                    found: t.describe(),
                },
            ),
            None => self.err(self.pos(), ParseErrorKind::UnexpectedEnd(expected)),
        }
    }

    fn expr(&mut self) -> Result<NCExpr, ParseError> {
        let mut terms = Vec::new();
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            terms.push(NCExpr::negated(self.term()?));
        } else {
            terms.push(self.term()?);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    terms.push(self.term()?);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    terms.push(NCExpr::negated(self.term()?));
                }
                _ => break,
            }
        }
        Ok(NCExpr::sum(terms))
    }

    fn term(&mut self) -> Result<NCExpr, ParseError> {
        let mut factors = vec![self.factor()?];
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    factors.push(self.factor()?);
                }
                Some(Tok::Slash) => {
                    let slash = self.pos();
                    self.bump();
                    let divisor = self.factor()?;
                    let Some(c) = divisor.as_scalar() else {
                        return self.err(slash, ParseErrorKind::NonScalarDivisor);
                    };
                    match c.inverse() {
                        Ok(inv) => factors.push(NCExpr::Scalar(inv)),
                        Err(_) => return self.err(slash, ParseErrorKind::DivisionByZero),
                    }
                }
                _ => break,
            }
        }
        Ok(NCExpr::product(factors))
    }

    fn factor(&mut self) -> Result<NCExpr, ParseError> {
        let base = self.primary()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        let caret = self.pos();
        self.bump();
        let exp = self.exponent()?;
        NCExpr::pow(base, exp).map_err(|e| ParseError {
            position: caret,
            kind: match e {
                PowError::NonInvertible => ParseErrorKind::NegativePower,
                PowError::Field(_) => ParseErrorKind::DivisionByZero,
            },
        })
    }

    fn signed_int(&mut self) -> Result<(usize, i64), ParseError> {
        let start = self.pos();
        let negative = if self.peek() == Some(&Tok::Minus) {
            self.bump();
            true
        } else {
            false
        };
        match self.peek() {
            Some(Tok::Int(n)) => {
                let n = if negative { -n.clone() } else { n.clone() };
                let pos = self.pos();
                self.bump();
                match n.to_i64() {
                    Some(v) => Ok((start, v)),
                    None => self.err(pos, ParseErrorKind::ExponentOverflow),
                }
            }
            _ => self.unexpected("integer exponent"),
        }
    }

    fn exponent(&mut self) -> Result<i64, ParseError> {
        let mut parts = vec![self.signed_int()?];
        while self.peek() == Some(&Tok::Caret) {
            self.bump();
            parts.push(self.signed_int()?);
        }
        let (_, mut acc) = parts.pop().unwrap();
        while let Some((pos, base)) = parts.pop() {
            let Ok(e) = u32::try_from(acc) else {
                return self.err(pos, ParseErrorKind::NonIntegerExponent);
            };
            acc = match base.checked_pow(e) {
                Some(v) => v,
                None => return self.err(pos, ParseErrorKind::ExponentOverflow),
            };
        }
        Ok(acc)
    }

    fn primary(&mut self) -> Result<NCExpr, ParseError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Int(n)) => {
                self.bump();
                Ok(NCExpr::Scalar(RatFunc::from_rational(Rational::from_integer(n))))
            }
            Some(Tok::Ident(name)) => {
                self.bump();
                if name == "q" {
                    return Ok(NCExpr::Scalar(RatFunc::q()));
                }
                match GenSymbol::from_atom(&name, self.presentation) {
                    Some(g) => Ok(NCExpr::Gen(g)),
                    None => self.err(
                        pos,
                        ParseErrorKind::UnknownSymbol {
                            symbol: name,
                            presentation: self.presentation,
                        },
                    ),
                }
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.unexpected("')'");
                }
                self.bump();
                Ok(inner)
            }
            _ => self.unexpected("a number, 'q', a generator or '('"),
        }
    }
}

/// Parses `text` as an expression over the given presentation.
pub fn parse(text: &str, presentation: Presentation) -> Result<NCExpr, ParseError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        idx: 0,
        presentation,
        end_pos: text.chars().count() + 1,
    };
    let e = p.expr()?;
    if p.peek().is_some() {
        return p.unexpected("an operator or end of input");
    }
    Ok(e)
}
