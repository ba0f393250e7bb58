//! Text grammar for user-supplied polynomials `F(x1, ..., xn)`.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary ('*' unary)*
//! unary   := ('+' | '-') unary | power
//! power   := atom ('^' integer)?
//! atom    := integer ('/' integer)? | variable | '(' expr ')'
//! variable:= 'x' integer            (x1 .. xn)
//! ```
//!
//! Whitespace is ignored between tokens. Implicit multiplication (`2x1`,
//! `x1 x2`) is rejected, and `/` is only accepted inside a rational literal.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::multi::MultiPoly;
use crate::error::{Error, Result};
use crate::rationals::Rational;

/// Largest exponent accepted after `^`.
pub const MAX_EXPONENT: u32 = 256;

#[derive(Debug, Clone, PartialEq)]
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
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().expect("digits")), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(Error::Parse {
                    position: start,
                    message: format!("unexpected character `{ch}`"),
                });
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    arity: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.mul(&self.unary()?)?;
                }
                Tok::Int(_) | Tok::Ident(_) | Tok::LParen => {
                    return self.error("implicit multiplication is not allowed; use `*`");
                }
                Tok::Slash => return self.error("`/` is only allowed between integer literals"),
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        match self.peek() {
            Tok::Minus => {
                self.bump();
                Ok(self.unary()?.negate())
            }
            Tok::Plus => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        let at = self.offset();
        match self.bump().0 {
            Tok::Int(e) => match e.to_u32() {
                Some(e) if e <= MAX_EXPONENT => Ok(base.pow(e)),
                _ => Err(Error::Parse {
                    position: at,
                    message: format!("exponent {e} exceeds the limit {MAX_EXPONENT}"),
                }),
            },
            _ => Err(Error::Parse {
                position: at,
                message: "expected a nonnegative integer exponent".into(),
            }),
        }
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let at = self.offset();
        match self.bump().0 {
            Tok::Int(n) => {
                if *self.peek() != Tok::Slash {
                    return Ok(MultiPoly::constant(self.arity, Rational::from_integer(n)));
                }
                self.bump();
                let dat = self.offset();
                match self.bump().0 {
                    Tok::Int(d) if d.is_zero() => Err(Error::Parse {
                        position: dat,
                        message: "zero denominator".into(),
                    }),
                    Tok::Int(d) => Ok(MultiPoly::constant(self.arity, Rational::new(n, d))),
                    _ => Err(Error::Parse {
                        position: dat,
                        message: "expected an integer denominator".into(),
                    }),
                }
            }
            Tok::Ident(name) => self.variable(name, at),
            Tok::LParen => {
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected `)`");
                }
                self.bump();
                Ok(inner)
            }
            Tok::End => Err(Error::Parse {
                position: at,
                message: "unexpected end of input".into(),
            }),
            t => Err(Error::Parse {
                position: at,
                message: format!("unexpected token {t:?}"),
            }),
        }
    }

    fn variable(&self, name: String, at: usize) -> Result<MultiPoly> {
        let index = name
            .strip_prefix('x')
            .filter(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) && !d.starts_with('0'))
            .and_then(|d| d.parse::<usize>().ok());
        match index {
            Some(i) if (1..=self.arity).contains(&i) => MultiPoly::var(self.arity, i - 1),
            _ => Err(Error::UnknownVariable {
                name,
                position: at,
                arity: self.arity,
            }),
        }
    }
}

/// Parses `text` as a polynomial in `x1..x{arity}`.
pub fn parse_poly(text: &str, arity: usize) -> Result<MultiPoly> {
    if arity == 0 {
        return Err(Error::Domain("arity must be positive".into()));
    }
    let mut p = Parser {
        toks: lex(text)?,
        pos: 0,
        arity,
    };
    let out = p.expr()?;
    match p.peek() {
        Tok::End => Ok(out),
        Tok::RParen => p.error("unbalanced `)`"),
        t => {
            let t = format!("{t:?}");
            p.error(format!("unexpected trailing token {t}"))
        }
    }
}
