//! Expression grammar shared by polynomials and differential operators.
//!
//! ```text
//! expr   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor ('*' factor)*
//! factor := int ['/' posint] | ident ['^' nat]
//! ```
//!
//! The parser only produces the term/factor structure; resolving names to
//! variables (and, for operators, to partial derivatives) is left to the
//! caller.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Polynomial, Rational, Vars};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Factor {
    Number(Rational),
    Symbol {
        name: String,
        exp: u32,
        line: usize,
        column: usize,
    },
}

/// A signed product of factors, in source order.
#[derive(Clone, Debug, PartialEq)]
pub struct Term {
    pub negative: bool,
    pub factors: Vec<Factor>,
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    column: usize,
    _src: &'a str,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
            line: 1,
            column: 1,
            _src: src,
        }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied()?;
        self.pos += 1;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column: self.column,
            message: message.into(),
        }
    }

    fn digits(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let s: String = self.chars[start..self.pos].iter().collect();
        Ok(s.parse().expect("digit string"))
    }

    fn factor(&mut self) -> Result<Factor> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.digits()?;
                if self.peek() == Some('/') {
                    self.bump();
                    let den = self.digits()?;
                    if den.is_zero() {
                        return Err(self.error("zero denominator"));
                    }
                    Ok(Factor::Number(Rational::new(num, den)))
                } else {
                    Ok(Factor::Number(Rational::from_integer(num)))
                }
            }
            Some(c) if c.is_ascii_alphabetic() || c == '_' => {
                let (line, column) = (self.line, self.column);
                let start = self.pos;
                while matches!(self.chars.get(self.pos), Some(c) if c.is_ascii_alphanumeric() || *c == '_') {
                    self.bump();
                }
                let name: String = self.chars[start..self.pos].iter().collect();
                let mut exp = 1;
                if self.peek() == Some('^') {
                    self.bump();
                    let e = self.digits()?;
                    exp = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
                }
                Ok(Factor::Symbol {
                    name,
                    exp,
                    line,
                    column,
                })
            }
            Some(c) => Err(self.error(format!("unexpected character `{c}`"))),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn term(&mut self, negative: bool) -> Result<Term> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some('*') {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(Term { negative, factors })
    }
}

/// Splits an expression into signed terms.
pub fn parse_terms(text: &str) -> Result<Vec<Term>> {
    let mut cur = Cursor::new(text);
    let mut terms = Vec::new();
    let mut negative = false;
    match cur.peek() {
        Some('-') => {
            cur.bump();
            negative = true;
        }
        Some('+') => {
            cur.bump();
        }
        _ => {}
    }
    terms.push(cur.term(negative)?);
    loop {
        match cur.peek() {
            None => break,
            Some('+') => {
                cur.bump();
                terms.push(cur.term(false)?);
            }
            Some('-') => {
                cur.bump();
                terms.push(cur.term(true)?);
            }
            Some(c) => return Err(cur.error(format!("unexpected character `{c}`"))),
        }
    }
    Ok(terms)
}

pub(crate) fn unknown(name: &str) -> Error {
    Error::UnknownVariable(name.to_string())
}

/// Parses a commutative polynomial in the given context.
pub fn parse_polynomial(text: &str, vars: &Vars) -> Result<Polynomial> {
    let mut out = Polynomial::zero(vars);
    for term in parse_terms(text)? {
        let mut coeff = if term.negative {
            -Rational::one()
        } else {
            Rational::one()
        };
        let mut mono = super::Monomial::one(vars.len());
        for f in term.factors {
            match f {
                Factor::Number(r) => coeff *= r,
                Factor::Symbol { name, exp, .. } => {
                    let i = vars.index_of(&name).ok_or_else(|| unknown(&name))?;
                    mono.0[i] += exp;
                }
            }
        }
        out.add_term(mono, coeff);
    }
    Ok(out)
}
