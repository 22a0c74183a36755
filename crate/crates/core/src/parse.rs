//! Text input for polynomials.
//!
//! Syntax: identifiers for variables, `i` for the imaginary unit, integer and
//! `a/b` rational literals, explicit `*` for products, `^` for nonnegative
//! integer powers, `+`/`-` and parentheses. Everything `Poly`'s `Display`
//! emits parses back to an equal polynomial.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::GaussianRational;
use crate::ring::PolyRing;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Slash,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub offset: usize,
}

pub(crate) fn tokenize(input: &str) -> Result<Vec<Spanned>> {
    let bytes = input.as_bytes();
    let mut toks = Vec::new();
    let mut pos = 0;
    while pos < bytes.len() {
        let c = bytes[pos] as char;
        if c.is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        let tok = match c {
            '+' => {
                pos += 1;
                Tok::Plus
            }
            '-' => {
                pos += 1;
                Tok::Minus
            }
            '*' => {
                pos += 1;
                Tok::Star
            }
            '^' => {
                pos += 1;
                Tok::Caret
            }
            '/' => {
                pos += 1;
                Tok::Slash
            }
            '(' => {
                pos += 1;
                Tok::LParen
            }
            ')' => {
                pos += 1;
                Tok::RParen
            }
            c if c.is_ascii_digit() => {
                while pos < bytes.len() && (bytes[pos] as char).is_ascii_digit() {
                    pos += 1;
                }
                Tok::Int(input[start..pos].parse().expect("digits parse as BigInt"))
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while pos < bytes.len()
                    && ((bytes[pos] as char).is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                Tok::Ident(input[start..pos].to_string())
            }
            other => {
                return Err(Error::Parse {
                    offset: start,
                    message: format!("unexpected character `{other}`"),
                })
            }
        };
        toks.push(Spanned { tok, offset: start });
    }
    Ok(toks)
}

struct Parser<'a> {
    ring: &'a PolyRing,
    toks: &'a [Spanned],
    pos: usize,
    input_len: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|s| &s.tok)
    }

    fn offset(&self) -> usize {
        self.toks
            .get(self.pos)
            .map(|s| s.offset)
            .unwrap_or(self.input_len)
    }

    fn bump(&mut self) -> Option<&Spanned> {
        let t = self.toks.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            offset: self.offset(),
            message: message.into(),
        })
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc + &t;
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.term()?;
                    acc = &acc - &t;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    let f = self.unary()?;
                    acc = &acc * &f;
                }
                Some(Tok::Slash) => {
                    let at = self.offset();
                    self.bump();
                    let f = self.unary()?;
                    if !f.is_constant() {
                        return Err(Error::Parse {
                            offset: at,
                            message: "division is only defined by nonzero constants".into(),
                        });
                    }
                    let c = f.constant_term();
                    match c.inv() {
                        Some(inv) => acc = acc.scale(&inv),
                        None => {
                            return Err(Error::Parse {
                                offset: at,
                                message: "division by zero".into(),
                            })
                        }
                    }
                }
                _ => return Ok(acc),
            }
        }
    }

    fn unary(&mut self) -> Result<Poly> {
        match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                let p = self.unary()?;
                Ok(-&p)
            }
            Some(Tok::Plus) => {
                self.bump();
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let at = self.offset();
            match self.bump().map(|s| s.tok.clone()) {
                Some(Tok::Int(n)) => {
                    let e: u32 = n.try_into().map_err(|_| Error::Parse {
                        offset: at,
                        message: "exponent must be a nonnegative integer that fits in u32".into(),
                    })?;
                    Ok(base.pow(e))
                }
                _ => Err(Error::Parse {
                    offset: at,
                    message: "expected integer exponent after `^`".into(),
                }),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Poly> {
        let offset = self.offset();
        match self.bump().map(|s| s.tok.clone()) {
            Some(Tok::Int(n)) => Ok(Poly::constant(
                self.ring,
                GaussianRational::new(BigRational::from_integer(n), BigRational::zero()),
            )),
            Some(Tok::Ident(name)) => {
                if name == "i" {
                    Ok(Poly::constant(self.ring, GaussianRational::i()))
                } else if let Some(idx) = self.ring.var_index(&name) {
                    Ok(Poly::var(self.ring, idx))
                } else {
                    Err(Error::Parse {
                        offset,
                        message: format!("unknown variable `{name}`"),
                    })
                }
            }
            Some(Tok::LParen) => {
                let inner = self.expr()?;
                match self.bump().map(|s| s.tok.clone()) {
                    Some(Tok::RParen) => Ok(inner),
                    _ => Err(Error::Parse {
                        offset,
                        message: "unclosed `(`".into(),
                    }),
                }
            }
            Some(other) => Err(Error::Parse {
                offset,
                message: format!("unexpected token {other:?}"),
            }),
            None => Err(Error::Parse {
                offset,
                message: "unexpected end of input".into(),
            }),
        }
    }
}

/// Parses a single power (atom with optional `^`) out of a token stream,
/// returning the polynomial and the next unconsumed token index. The form
/// parser uses this for coefficient factors between wedge differentials.
pub(crate) fn parse_power_at(
    ring: &PolyRing,
    toks: &[Spanned],
    pos: usize,
    input_len: usize,
) -> Result<(Poly, usize)> {
    let mut p = Parser {
        ring,
        toks,
        pos,
        input_len,
    };
    let poly = p.power()?;
    Ok((poly, p.pos))
}

/// Parse a polynomial in `ring` from text.
pub fn parse_poly(ring: &PolyRing, input: &str) -> Result<Poly> {
    let toks = tokenize(input)?;
    if toks.is_empty() {
        return Err(Error::Parse {
            offset: 0,
            message: "empty polynomial".into(),
        });
    }
    let mut p = Parser {
        ring,
        toks: &toks,
        pos: 0,
        input_len: input.len(),
    };
    let poly = p.expr()?;
    if p.pos != toks.len() {
        return p.err("trailing input after polynomial");
    }
    Ok(poly)
}

impl PolyRing {
    pub fn parse(&self, input: &str) -> Result<Poly> {
        parse_poly(self, input)
    }
}
