use std::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{Monomial, ParsedPolynomial, Polynomial};
use crate::error::{Error, Result};

/// `x1, x2, ..., xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

fn name(names: &[String], v: usize) -> String {
    names.get(v).cloned().unwrap_or_else(|| format!("x{}", v + 1))
}

fn monomial_text(m: &Monomial, names: &[String]) -> String {
    let mut s = String::new();
    for (k, &(v, e)) in m.powers().iter().enumerate() {
        if k > 0 {
            s.push('*');
        }
        s.push_str(&name(names, v));
        if e > 1 {
            let _ = write!(s, "^{e}");
        }
    }
    s
}

/// Canonical text: descending graded-lex, readable back by the parser.
pub fn to_text(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms_desc().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() {
            let _ = write!(out, "{a}");
        } else if a.is_one() {
            out.push_str(&monomial_text(m, names));
        } else {
            let _ = write!(out, "{a}*{}", monomial_text(m, names));
        }
    }
    out
}

fn latex_name(n: &str) -> String {
    let split = n.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if split == 0 || split == n.len() {
        n.to_string()
    } else {
        format!("{}_{{{}}}", &n[..split], &n[split..])
    }
}

pub fn to_latex(p: &Polynomial, names: &[String]) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (m, c)) in p.terms_desc().enumerate() {
        let neg = c.is_negative();
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        let a = c.abs();
        if m.is_one() || !a.is_one() {
            let _ = write!(out, "{a}");
        }
        for &(v, e) in m.powers() {
            out.push_str(&latex_name(&name(names, v)));
            if e > 1 {
                let _ = write!(out, "^{{{e}}}");
            }
        }
    }
    out
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct PolynomialDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermDoc {
    pub coeff: String,
    pub exps: Vec<u32>,
}

impl PolynomialDoc {
    pub fn new(p: &Polynomial, names: &[String]) -> Self {
        let n = p.nvars().max(names.len());
        let vars = (0..n).map(|v| name(names, v)).collect();
        PolynomialDoc {
            vars,
            terms: p
                .terms_desc()
                .map(|(m, c)| TermDoc {
                    coeff: c.to_string(),
                    exps: m.to_exponents(n),
                })
                .collect(),
        }
    }

    pub fn to_polynomial(&self) -> Result<ParsedPolynomial> {
        let n = self.vars.len();
        let mut poly = Polynomial::zero(n);
        for t in &self.terms {
            if t.exps.len() != n {
                return Err(Error::Document(format!(
                    "term has {} exponents for {n} variables",
                    t.exps.len()
                )));
            }
            let c: BigInt = t
                .coeff
                .parse()
                .map_err(|_| Error::Document(format!("bad coefficient `{}`", t.coeff)))?;
            poly.add_term(Monomial::from_exponents(&t.exps), c);
        }
        Ok(ParsedPolynomial {
            poly,
            vars: self.vars.clone(),
        })
    }
}

pub fn to_json(p: &Polynomial, names: &[String]) -> String {
    serde_json::to_string(&PolynomialDoc::new(p, names)).expect("plain data serializes")
}

pub fn from_json(text: &str) -> Result<ParsedPolynomial> {
    let doc: PolynomialDoc = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    doc.to_polynomial()
}
