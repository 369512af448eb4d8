//! Recursive-descent parser for ring element expressions.
//!
//! ```text
//! expr     := term (('+' | '-') term)*
//! term     := ['-'] factor (('*' | '/') factor)*
//! factor   := base ('^' nonneg-int)?
//! base     := rational | variable | '(' expr ')'
//! rational := int ('/' int)?
//! ```
//!
//! `a/b` between two integer literals is read as a rational literal unless
//! the denominator is raised to a power. Division of general factors is
//! only permitted in rational-function and series rings.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{Ring, RingElement};
use crate::{Error, Rational, Result};

/// Named elements that may appear as atoms next to the ring variables.
pub type Bindings = HashMap<String, RingElement>;

pub fn parse_expression(text: &str, ring: &Ring) -> Result<RingElement> {
    parse_expression_with(text, ring, &Bindings::new())
}

pub fn parse_expression_with(text: &str, ring: &Ring, bindings: &Bindings) -> Result<RingElement> {
    let tokens = tokenize(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        ring,
        bindings,
    };
    let value = p.expr()?;
    match p.peek() {
        Tok::End => Ok(value),
        _ => Err(p.error("operator or end of input")),
    }
}

#[derive(Clone, Debug, PartialEq)]
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

fn tokenize(text: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            '0'..='9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].parse().unwrap()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                return Err(Error::Syntax {
                    position: start,
                    expected: "number, variable, operator, or parenthesis".into(),
                })
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

struct Parser<'a> {
    tokens: Vec<(Tok, usize)>,
    pos: usize,
    ring: &'a Ring,
    bindings: &'a Bindings,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.tokens[self.pos].0
    }

    fn peek_at(&self, offset: usize) -> &Tok {
        let i = (self.pos + offset).min(self.tokens.len() - 1);
        &self.tokens[i].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.tokens[self.pos].0.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        Error::Syntax {
            position: self.tokens[self.pos].1,
            expected: expected.into(),
        }
    }

    fn expr(&mut self) -> Result<RingElement> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    acc = acc.try_add(&self.term()?)?;
                }
                Tok::Minus => {
                    self.bump();
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RingElement> {
        let negate = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Tok::Slash => {
                    self.bump();
                    let rhs = self.factor()?;
                    acc = acc.divide(&rhs)?;
                }
                _ => break,
            }
        }
        Ok(if negate { -acc } else { acc })
    }

    fn factor(&mut self) -> Result<RingElement> {
        let base = self.base()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.bump() {
            Tok::Int(n) => {
                let exp = u32::try_from(&n).map_err(|_| Error::Syntax {
                    position: self.tokens[self.pos.saturating_sub(1)].1,
                    expected: "exponent below 2^32".into(),
                })?;
                Ok(base.pow(exp))
            }
            _ => {
                self.pos -= 1;
                Err(self.error("nonnegative integer exponent"))
            }
        }
    }

    fn base(&mut self) -> Result<RingElement> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                let literal_den = match (self.peek(), self.peek_at(1), self.peek_at(2)) {
                    (Tok::Slash, Tok::Int(d), next) if *next != Tok::Caret => Some(d.clone()),
                    _ => None,
                };
                let value = match literal_den {
                    Some(d) => {
                        self.bump();
                        self.bump();
                        if num_traits::Zero::is_zero(&d) {
                            return Err(Error::DivisionByZero);
                        }
                        Rational::new(n, d)
                    }
                    None => Rational::from_integer(n),
                };
                Ok(RingElement::from_rational(self.ring, value))
            }
            Tok::Ident(name) => {
                self.bump();
                if let Some(i) = self.ring.var_index(&name) {
                    RingElement::var(self.ring, i)
                } else if let Some(e) = self.bindings.get(&name) {
                    e.coerce(self.ring)
                } else {
                    Err(Error::UnknownVariable(name))
                }
            }
            Tok::LParen => {
                self.bump();
                let inner = self.expr()?;
                if *self.peek() != Tok::RParen {
                    return Err(self.error("`)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => Err(self.error("number, variable, or `(`")),
        }
    }
}
