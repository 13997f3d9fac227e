use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{Monomial, ParsedPolynomial, Polynomial};

/// Coefficient of one input term: a plain integer, or `multiplier * name`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Coefficient {
    Integer(BigInt),
    Named { param: usize, multiplier: BigInt },
}

/// Polynomial whose coefficients may be named parameters.
///
/// Terms keep their input order; that order fixes the numbering of the
/// variables introduced when coefficients are lifted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffPolynomial {
    vars: Vec<String>,
    params: Vec<String>,
    terms: Vec<(Coefficient, Monomial)>,
}

impl CoeffPolynomial {
    /// Like terms (same monomial, same parameter) are combined into the
    /// first occurrence; zero terms are dropped.
    pub fn new(vars: Vec<String>, params: Vec<String>, raw: Vec<(Coefficient, Monomial)>) -> Self {
        let mut terms: Vec<(Coefficient, Monomial)> = Vec::with_capacity(raw.len());
        for (c, m) in raw {
            let slot = terms.iter_mut().find(|(tc, tm)| {
                *tm == m
                    && match (tc, &c) {
                        (Coefficient::Integer(_), Coefficient::Integer(_)) => true,
                        (Coefficient::Named { param: a, .. }, Coefficient::Named { param: b, .. }) => a == b,
                        _ => false,
                    }
            });
            match (slot, c) {
                (Some((Coefficient::Integer(acc), _)), Coefficient::Integer(v)) => *acc += v,
                (Some((Coefficient::Named { multiplier: acc, .. }, _)), Coefficient::Named { multiplier: v, .. }) => {
                    *acc += v
                }
                (_, c) => terms.push((c, m)),
            }
        }
        terms.retain(|(c, _)| match c {
            Coefficient::Integer(v) => !v.is_zero(),
            Coefficient::Named { multiplier, .. } => !multiplier.is_zero(),
        });
        CoeffPolynomial { vars, params, terms }
    }

    pub fn from_integer(p: &ParsedPolynomial) -> Self {
        let terms = p
            .poly
            .terms_desc()
            .map(|(m, c)| (Coefficient::Integer(c.clone()), m.clone()))
            .collect();
        CoeffPolynomial::new(p.vars.clone(), Vec::new(), terms)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn terms(&self) -> &[(Coefficient, Monomial)] {
        &self.terms
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(c, _)| matches!(c, Coefficient::Integer(_)))
    }

    /// Names of the combined ring: variables first, then parameters.
    pub fn combined_names(&self) -> Vec<String> {
        self.vars.iter().chain(self.params.iter()).cloned().collect()
    }

    /// The same polynomial in `Z[x_0..x_{k-1}, c_0..c_{m-1}]`, parameter `j`
    /// sitting at index `k + j`.
    pub fn to_polynomial(&self) -> Polynomial {
        let k = self.vars.len();
        let nvars = k + self.params.len();
        Polynomial::from_terms(
            nvars,
            self.terms.iter().map(|(c, m)| match c {
                Coefficient::Integer(v) => (m.clone(), v.clone()),
                Coefficient::Named { param, multiplier } => {
                    (m.mul(&Monomial::var(k + param)), multiplier.clone())
                }
            }),
        )
    }

    /// Every term with coefficient exactly one is left alone during lifting.
    pub(crate) fn is_unit_term(c: &Coefficient) -> bool {
        matches!(c, Coefficient::Integer(v) if v.is_one())
    }
}
