//! Text grammar for elements of 𝔽_p(x).
//!
//! ```text
//! expr  := term (('+' | '-') term)*
//! term  := unary (('*' | '/') unary | unary)*     juxtaposition multiplies
//! unary := ('-' | '+') unary | power
//! power := atom ('^' '-'? integer)?
//! atom  := integer | 'x' | '(' expr ')'
//! ```
//!
//! Whitespace is ignored. Integers are reduced mod p.

use super::prime::PrimeField;
use super::rational::RationalFunction;
use crate::error::{Error, Result};

pub fn parse_rational(field: PrimeField, text: &str) -> Result<RationalFunction> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(Error::Parse("empty expression".into()));
    }
    let mut parser = Parser { field, chars, pos: 0 };
    let value = parser.expr()?;
    if parser.pos != parser.chars.len() {
        return Err(parser.unexpected());
    }
    Ok(value)
}

struct Parser {
    field: PrimeField,
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn unexpected(&self) -> Error {
        match self.peek() {
            Some(c) => Error::Parse(format!("unexpected '{c}' at position {}", self.pos)),
            None => Error::Parse("unexpected end of input".into()),
        }
    }

    fn expr(&mut self) -> Result<RationalFunction> {
        let mut acc = self.term()?;
        while let Some(c) = self.peek() {
            match c {
                '+' => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                '-' => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<RationalFunction> {
        let mut acc = self.unary()?;
        while let Some(c) = self.peek() {
            match c {
                '*' => {
                    self.pos += 1;
                    acc = acc.mul(&self.unary()?);
                }
                '/' => {
                    self.pos += 1;
                    acc = acc.div(&self.unary()?)?;
                }
                '(' | 'x' | '0'..='9' => acc = acc.mul(&self.power()?),
                _ => break,
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.unary()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.unary()
            }
            _ => self.power(),
        }
    }

    fn power(&mut self) -> Result<RationalFunction> {
        let base = self.atom()?;
        if self.peek() != Some('^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some('-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let start = self.pos;
        while matches!(self.peek(), Some('0'..='9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.unexpected());
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        let e: i64 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("exponent {digits} out of range")))?;
        if e > 1 << 20 {
            return Err(Error::Parse(format!("exponent {digits} out of range")));
        }
        base.pow(if negative { -e } else { e })
    }

    fn atom(&mut self) -> Result<RationalFunction> {
        match self.peek() {
            Some('x') => {
                self.pos += 1;
                Ok(RationalFunction::x(self.field))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.unexpected());
                }
                self.pos += 1;
                Ok(inner)
            }
            Some('0'..='9') => {
                let p = self.field.modulus() as u64;
                let mut v = 0u64;
                while let Some(d) = self.peek().and_then(|c| c.to_digit(10)) {
                    v = (v * 10 + d as u64) % p;
                    self.pos += 1;
                }
                Ok(RationalFunction::constant(self.field, v as i64))
            }
            _ => Err(self.unexpected()),
        }
    }
}
