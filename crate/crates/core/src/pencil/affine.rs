use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{Monomial, Polynomial};

/// `constant + sum linear[v] * x_v`, with no zero linear coefficients stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AffineEntry {
    constant: BigInt,
    linear: BTreeMap<usize, BigInt>,
}

impl AffineEntry {
    pub fn new<I: IntoIterator<Item = (usize, BigInt)>>(constant: impl Into<BigInt>, linear: I) -> Self {
        let mut e = AffineEntry::constant(constant);
        for (v, c) in linear {
            e.add_linear(v, &c);
        }
        e
    }

    pub fn zero() -> Self {
        AffineEntry::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        AffineEntry {
            constant: c.into(),
            linear: BTreeMap::new(),
        }
    }

    /// `coeff * x_var`.
    pub fn term(var: usize, coeff: impl Into<BigInt>) -> Self {
        AffineEntry::new(0, [(var, coeff.into())])
    }

    /// Degree <= 1 polynomials convert; anything else gives `None`.
    pub fn from_polynomial(p: &Polynomial) -> Option<Self> {
        let mut e = AffineEntry::zero();
        for (m, c) in p.iter() {
            match m.degree() {
                0 => e.constant = c.clone(),
                1 => e.add_linear(m.as_var()?, c),
                _ => return None,
            }
        }
        Some(e)
    }

    pub fn constant_part(&self) -> &BigInt {
        &self.constant
    }

    pub fn linear(&self) -> &BTreeMap<usize, BigInt> {
        &self.linear
    }

    pub fn coeff_of(&self, var: usize) -> BigInt {
        self.linear.get(&var).cloned().unwrap_or_default()
    }

    pub fn is_constant(&self) -> bool {
        self.linear.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.linear.is_empty() && self.constant.is_zero()
    }

    pub fn var_bound(&self) -> usize {
        self.linear.keys().next_back().map_or(0, |v| v + 1)
    }

    fn add_linear(&mut self, var: usize, c: &BigInt) {
        let slot = self.linear.entry(var).or_default();
        *slot += c;
        if slot.is_zero() {
            self.linear.remove(&var);
        }
    }

    /// `self + k * other`.
    pub fn add_scaled(&self, other: &AffineEntry, k: &BigInt) -> AffineEntry {
        let mut out = self.clone();
        if k.is_zero() {
            return out;
        }
        out.constant += &other.constant * k;
        for (&v, c) in &other.linear {
            out.add_linear(v, &(c * k));
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> AffineEntry {
        AffineEntry::zero().add_scaled(self, k)
    }

    pub fn neg(&self) -> AffineEntry {
        self.scale(&BigInt::from(-1))
    }

    pub fn to_polynomial(&self, nvars: usize) -> Polynomial {
        let n = nvars.max(self.var_bound());
        Polynomial::from_terms(
            n,
            std::iter::once((Monomial::one(), self.constant.clone()))
                .chain(self.linear.iter().map(|(&v, c)| (Monomial::var(v), c.clone()))),
        )
    }

    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        let mut total = self.constant.clone();
        for (&v, c) in &self.linear {
            total += c * &point[v];
        }
        total
    }
}
