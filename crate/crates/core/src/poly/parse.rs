//! Recursive-descent reader for the polynomial input language.
//!
//! ```text
//! poly   := [sign] term (('+' | '-') term)*
//! term   := [integer] ('*'? factor)*
//! factor := var ('^' uint)? | '[' name ']'
//! ```
//!
//! Bracketed names are symbolic coefficients and are only accepted by
//! [`parse_coeff_polynomial`]. Whitespace is insignificant.

use num_bigint::BigInt;
use num_traits::One;

use super::symbolic::{CoeffPolynomial, Coefficient};
use super::{Monomial, Polynomial};
use crate::error::{Error, Result};

/// A parsed polynomial together with its variable names, indexed 0..k-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedPolynomial {
    pub poly: Polynomial,
    pub vars: Vec<String>,
}

pub fn parse_polynomial(text: &str, var_order: Option<&[String]>) -> Result<ParsedPolynomial> {
    let mut parser = Parser::new(text, var_order);
    let terms = parser.poly()?;
    let nvars = parser.vars.len();
    let mut poly = Polynomial::zero(nvars);
    for t in terms {
        if let Some((_, pos)) = t.names.first() {
            return Err(Error::Syntax {
                pos: *pos,
                message: "symbolic coefficients are not allowed here".into(),
            });
        }
        poly.add_term(t.monomial, t.coeff);
    }
    Ok(ParsedPolynomial {
        poly: poly.with_nvars(nvars),
        vars: parser.vars,
    })
}

/// Parses input that may carry bracketed coefficient names, e.g.
/// `[c200]*x1^2 - [c110]*x1*x2 + 3`.
pub fn parse_coeff_polynomial(text: &str, var_order: Option<&[String]>) -> Result<CoeffPolynomial> {
    let mut parser = Parser::new(text, var_order);
    let terms = parser.poly()?;
    let mut params: Vec<String> = Vec::new();
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coeff = match t.names.as_slice() {
            [] => Coefficient::Integer(t.coeff),
            [(name, _)] => {
                let idx = match params.iter().position(|p| p == name) {
                    Some(i) => i,
                    None => {
                        params.push(name.clone());
                        params.len() - 1
                    }
                };
                Coefficient::Named {
                    param: idx,
                    multiplier: t.coeff,
                }
            }
            [_, (_, pos), ..] => {
                return Err(Error::Syntax {
                    pos: *pos,
                    message: "a term may carry at most one symbolic coefficient".into(),
                })
            }
        };
        out.push((coeff, t.monomial));
    }
    Ok(CoeffPolynomial::new(parser.vars, params, out))
}

struct RawTerm {
    coeff: BigInt,
    monomial: Monomial,
    names: Vec<(String, usize)>,
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    vars: Vec<String>,
    fixed: bool,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str, var_order: Option<&[String]>) -> Self {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            vars: var_order.map(<[String]>::to_vec).unwrap_or_default(),
            fixed: var_order.is_some(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.pos,
            message: message.into(),
        })
    }

    fn poly(&mut self) -> Result<Vec<RawTerm>> {
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let mut t = self.term()?;
            if negative {
                t.coeff = -t.coeff;
            }
            terms.push(t);
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(c) => return self.err(format!("unexpected `{}`", c as char)),
            }
            self.pos += 1;
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<RawTerm> {
        let mut coeff = BigInt::one();
        let mut powers = Vec::new();
        let mut names = Vec::new();
        let mut seen = false;
        if let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                coeff = self.integer()?;
                seen = true;
            }
        }
        loop {
            let star = if self.peek() == Some(b'*') {
                self.pos += 1;
                true
            } else {
                false
            };
            match self.peek() {
                Some(b'[') => {
                    let at = self.pos;
                    self.pos += 1;
                    let name = self.ident()?;
                    if self.peek() != Some(b']') {
                        return self.err("expected `]`");
                    }
                    self.pos += 1;
                    names.push((name, at));
                }
                Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                    let name = self.ident()?;
                    let var = self.lookup(&name)?;
                    let exp = if self.peek() == Some(b'^') {
                        self.pos += 1;
                        self.exponent()?
                    } else {
                        1
                    };
                    powers.push((var, exp));
                }
                _ if star => return self.err("expected a variable or coefficient after `*`"),
                _ => break,
            }
            seen = true;
        }
        if !seen {
            return self.err("expected a term");
        }
        Ok(RawTerm {
            coeff,
            monomial: Monomial::from_powers(powers),
            names,
        })
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected an integer");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        Ok(digits.parse::<BigInt>().expect("decimal digits"))
    }

    fn exponent(&mut self) -> Result<u32> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::BadExponent { pos: start });
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii digits")
            .parse::<u32>()
            .map_err(|_| Error::BadExponent { pos: start })
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() || *c == b'_' => self.pos += 1,
            _ => return self.err("expected a name"),
        }
        while self.pos < self.src.len() && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_') {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn lookup(&mut self, name: &str) -> Result<usize> {
        if let Some(i) = self.vars.iter().position(|v| v == name) {
            return Ok(i);
        }
        if self.fixed {
            return Err(Error::UnknownVariable(name.to_string()));
        }
        self.vars.push(name.to_string());
        Ok(self.vars.len() - 1)
    }
}
