//! Recursive-descent parser for the identity language.
//!
//! ```text
//! identity   := expr ("==" expr)+
//! expr       := term (("+" | "-") term)*
//! term       := factor (("*" factor) | factor)*      adjacency is product
//! factor     := atom (("^" nat) | ("/" rational))*
//! atom       := rational | familyterm | "(" expr ")" | "-" atom
//! familyterm := ("T" | "L" | "B" | "C" | "E") "(" index ")"
//! index      := [int] "n" (("+" | "-") nat)? | int
//! rational   := int ("/" nat)?
//! ```
//!
//! Whitespace is insignificant. Errors carry the byte offset of the offending
//! token.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

use crate::sequences::Family;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(BigRational),
    /// `family(a·n + b)`
    Family { family: Family, a: i64, b: i64 },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Div(Box<Expr>, BigRational),
}

/// A chain `e0 == e1 == ...` with at least two sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identity {
    pub sides: Vec<Expr>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("at byte {offset}: {kind}")]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("expected {}, found {found}", expected.join(" or "))]
    Unexpected { expected: Vec<&'static str>, found: String },
    #[error("unexpected character `{0}`")]
    InvalidCharacter(char),
    #[error("unknown family `{0}` (expected T, L, B, C or E)")]
    UnknownFamily(String),
    #[error("index coefficients must be integers")]
    NonIntegerIndex,
    #[error("integer `{0}` out of range")]
    OutOfRange(String),
    #[error("division by zero")]
    DivisionByZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    EqEq,
    End,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Num(v) => write!(f, "`{v}`"),
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Plus => f.write_str("`+`"),
            Tok::Minus => f.write_str("`-`"),
            Tok::Star => f.write_str("`*`"),
            Tok::Slash => f.write_str("`/`"),
            Tok::Caret => f.write_str("`^`"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::EqEq => f.write_str("`==`"),
            Tok::End => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Num(text[start..i].parse().expect("ascii digits"))));
                continue;
            }
            b'a'..=b'z' | b'A'..=b'Z' => {
                while i < bytes.len() && bytes[i].is_ascii_alphabetic() {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_string())));
                continue;
            }
            b'=' if bytes.get(i + 1) == Some(&b'=') => {
                i += 2;
                out.push((start, Tok::EqEq));
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            _ => {
                let ch = text[i..].chars().next().expect("in bounds");
                return Err(ParseError { offset: i, kind: ParseErrorKind::InvalidCharacter(ch) });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Tok::End));
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].1
    }

    fn peek_at(&self, ahead: usize) -> &Tok {
        let i = (self.pos + ahead).min(self.toks.len() - 1);
        &self.toks[i].1
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].1.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, kind: ParseErrorKind) -> ParseError {
        ParseError { offset: self.offset(), kind }
    }

    fn unexpected(&self, expected: &[&'static str]) -> ParseError {
        self.error(ParseErrorKind::Unexpected {
            expected: expected.to_vec(),
            found: self.peek().to_string(),
        })
    }

    fn expect(&mut self, tok: Tok, name: &'static str) -> Result<(), ParseError> {
        if *self.peek() == tok {
            self.bump();
            Ok(())
        } else {
            Err(self.unexpected(&[name]))
        }
    }

    fn identity(&mut self) -> Result<Identity, ParseError> {
        let mut sides = vec![self.expr()?];
        while *self.peek() == Tok::EqEq {
            self.bump();
            sides.push(self.expr()?);
        }
        if sides.len() < 2 {
            return Err(self.unexpected(&["`==`", "`+`", "`-`", "`*`"]));
        }
        if *self.peek() != Tok::End {
            return Err(self.unexpected(&["`==`", "`+`", "`-`", "`*`", "end of input"]));
        }
        Ok(Identity { sides })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Tok::Num(_) | Tok::Ident(_) | Tok::LParen => {
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let mut base = self.atom()?;
        loop {
            match self.peek() {
                Tok::Caret => {
                    self.bump();
                    let e = self.nat()?;
                    let e = e
                        .to_u32()
                        .ok_or_else(|| self.error(ParseErrorKind::OutOfRange(e.to_string())))?;
                    base = Expr::Pow(Box::new(base), e);
                }
                Tok::Slash => {
                    self.bump();
                    let sign_offset = self.offset();
                    let negative = *self.peek() == Tok::Minus;
                    if negative {
                        self.bump();
                    }
                    let mut q = self.rational()?;
                    if negative {
                        q = -q;
                    }
                    if q.is_zero() {
                        return Err(ParseError {
                            offset: sign_offset,
                            kind: ParseErrorKind::DivisionByZero,
                        });
                    }
                    base = Expr::Div(Box::new(base), q);
                }
                _ => return Ok(base),
            }
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(_) => Ok(Expr::Rational(self.rational()?)),
            Tok::Minus => {
                self.bump();
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(inner)
            }
            Tok::Ident(name) => {
                let family = match name.as_str() {
                    "T" => Family::T,
                    "L" => Family::L,
                    "B" => Family::B,
                    "C" => Family::C,
                    "E" => Family::E,
                    _ if *self.peek_at(1) == Tok::LParen => {
                        return Err(self.error(ParseErrorKind::UnknownFamily(name)));
                    }
                    _ => return Err(self.unexpected(&["number", "family term", "`(`", "`-`"])),
                };
                self.bump();
                self.expect(Tok::LParen, "`(`")?;
                let (a, b) = self.index()?;
                if *self.peek() == Tok::Slash {
                    return Err(self.error(ParseErrorKind::NonIntegerIndex));
                }
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr::Family { family, a, b })
            }
            _ => Err(self.unexpected(&["number", "family term", "`(`", "`-`"])),
        }
    }

    /// `int / nat` or plain `int`; the sign is handled by the caller.
    fn rational(&mut self) -> Result<BigRational, ParseError> {
        let num = self.nat()?;
        if *self.peek() == Tok::Slash && matches!(self.peek_at(1), Tok::Num(_)) {
            self.bump();
            let den_offset = self.offset();
            let den = self.nat()?;
            if den.is_zero() {
                return Err(ParseError { offset: den_offset, kind: ParseErrorKind::DivisionByZero });
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn nat(&mut self) -> Result<BigInt, ParseError> {
        match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                Ok(v)
            }
            _ => Err(self.unexpected(&["number"])),
        }
    }

    fn small(&self, v: BigInt, offset: usize) -> Result<i64, ParseError> {
        v.to_i64().ok_or(ParseError { offset, kind: ParseErrorKind::OutOfRange(v.to_string()) })
    }

    /// Returns `(a, b)` for the affine index `a·n + b`.
    fn index(&mut self) -> Result<(i64, i64), ParseError> {
        let negative = *self.peek() == Tok::Minus;
        if negative {
            self.bump();
        }
        let sign = if negative { -1 } else { 1 };
        let coeff_offset = self.offset();
        let coeff = match self.peek().clone() {
            Tok::Num(v) => {
                self.bump();
                if *self.peek() == Tok::Slash {
                    return Err(self.error(ParseErrorKind::NonIntegerIndex));
                }
                Some(self.small(v, coeff_offset)?)
            }
            _ => None,
        };
        let has_n = matches!(self.peek(), Tok::Ident(s) if s == "n");
        if !has_n {
            return match coeff {
                Some(b) => Ok((0, sign * b)),
                None => Err(self.unexpected(&["number", "`n`"])),
            };
        }
        self.bump();
        let a = sign * coeff.unwrap_or(1);
        let b = match self.peek() {
            Tok::Plus | Tok::Minus => {
                let s = if self.bump() == Tok::Minus { -1 } else { 1 };
                let off = self.offset();
                let v = self.nat()?;
                s * self.small(v, off)?
            }
            _ => 0,
        };
        Ok((a, b))
    }
}

pub fn parse_identity(text: &str) -> Result<Identity, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    p.identity()
}

/// Parses a single expression, without `==`.
pub fn parse_expr(text: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return Err(p.unexpected(&["`+`", "`-`", "`*`", "end of input"]));
    }
    Ok(e)
}

fn fmt_index(f: &mut fmt::Formatter<'_>, a: i64, b: i64) -> fmt::Result {
    match a {
        0 => return write!(f, "{b}"),
        1 => f.write_str("n")?,
        -1 => f.write_str("-n")?,
        _ => write!(f, "{a}n")?,
    }
    match b {
        0 => Ok(()),
        b if b > 0 => write!(f, "+{b}"),
        b => write!(f, "{b}"),
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Rational(q) => write!(f, "{q}"),
            Expr::Family { family, a, b } => {
                write!(f, "{family}(")?;
                fmt_index(f, *a, *b)?;
                f.write_str(")")
            }
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Add(x, y) => write!(f, "({x} + {y})"),
            Expr::Sub(x, y) => write!(f, "({x} - {y})"),
            Expr::Mul(x, y) => write!(f, "{x}*{y}"),
            Expr::Pow(x, e) => write!(f, "({x})^{e}"),
            Expr::Div(x, q) => write!(f, "({x})/{q}"),
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, side) in self.sides.iter().enumerate() {
            if i > 0 {
                f.write_str(" == ")?;
            }
            write!(f, "{side}")?;
        }
        Ok(())
    }
}
