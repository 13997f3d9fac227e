use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Monomial;
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Equality compares terms only; `nvars` is the size of the ambient ring.
#[derive(Clone, Debug, Default)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl std::hash::Hash for Polynomial {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

/// Image of a variable under [`Polynomial::substitute_linear`]:
/// `scalar * x_var`, or the constant `scalar` when `var` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearBinding {
    pub scalar: BigInt,
    pub var: Option<usize>,
}

impl LinearBinding {
    pub fn scaled(scalar: impl Into<BigInt>, var: usize) -> Self {
        LinearBinding {
            scalar: scalar.into(),
            var: Some(var),
        }
    }

    pub fn constant(scalar: impl Into<BigInt>) -> Self {
        LinearBinding {
            scalar: scalar.into(),
            var: None,
        }
    }
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(BigInt::one(), nvars)
    }

    pub fn constant(c: impl Into<BigInt>, nvars: usize) -> Self {
        Self::from_terms(nvars, [(Monomial::one(), c.into())])
    }

    pub fn var(index: usize, nvars: usize) -> Self {
        Self::from_terms(nvars.max(index + 1), [(Monomial::var(index), BigInt::one())])
    }

    pub fn monomial(m: Monomial, c: impl Into<BigInt>, nvars: usize) -> Self {
        let nvars = nvars.max(m.var_bound());
        Self::from_terms(nvars, [(m, c.into())])
    }

    /// Collects terms, combining like monomials and dropping zeros.
    /// `nvars` grows if a monomial mentions a larger index.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigInt)>>(nvars: usize, terms: I) -> Self {
        let mut p = Polynomial::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        self.nvars = self.nvars.max(m.var_bound());
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Same polynomial viewed in a ring with at least `nvars` variables.
    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = self.nvars.max(nvars);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn coeff(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// Terms in ascending graded-lex order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical (descending graded-lex) order.
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(&Monomial::one())
    }

    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, k: &BigInt) -> Polynomial {
        if k.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars.max(m.var_bound()),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c * k)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact integer value at `point`.
    pub fn evaluate(&self, point: &[BigInt]) -> Result<BigInt> {
        if point.len() != self.nvars {
            return Err(Error::LengthMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        Ok(self.eval_unchecked(point))
    }

    pub(crate) fn eval_unchecked(&self, point: &[BigInt]) -> BigInt {
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for &(v, e) in m.powers() {
                t *= num_traits::pow(point[v].clone(), e as usize);
            }
            total += t;
        }
        total
    }

    /// Ring homomorphism sending `x_i` to `images[i]`, landing in a ring
    /// with `nvars` variables.
    pub fn substitute(&self, images: &[Polynomial], nvars: usize) -> Polynomial {
        debug_assert!(images.len() >= self.nvars);
        let mut out = Polynomial::zero(nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone(), nvars);
            for &(v, e) in m.powers() {
                t = &t * &images[v].pow(e);
            }
            out = &out + &t;
        }
        out.with_nvars(nvars)
    }

    /// Replaces each bound variable by `scalar * x_var` (or by the constant
    /// `scalar`) and recombines like terms.
    pub fn substitute_linear(&self, bindings: &BTreeMap<usize, LinearBinding>) -> Result<Polynomial> {
        let n = self.nvars;
        let mut images: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(i, n)).collect();
        for (&var, b) in bindings {
            if var >= n {
                return Err(Error::BindingOutOfRange { var, nvars: n });
            }
            images[var] = match b.var {
                Some(t) if t >= n => return Err(Error::BindingOutOfRange { var: t, nvars: n }),
                Some(t) => Polynomial::var(t, n).scale(&b.scalar),
                None => Polynomial::constant(b.scalar.clone(), n),
            };
        }
        Ok(self.substitute(&images, n))
    }

    /// `self / divisor` when the division is exact, via repeated
    /// leading-term cancellation in graded-lex order.
    pub fn exact_div(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let nvars = self.nvars.max(divisor.nvars);
        let mut rem = self.clone();
        let mut quot = Polynomial::zero(nvars);
        while let Some((rm, rc)) = rem.leading_term() {
            let m = lm.div(rm)?;
            let (q, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            rem = &rem - &divisor.mul_monomial(&m, &q);
            quot.add_term(m, q);
        }
        Some(quot.with_nvars(nvars))
    }

    /// Gcd of the integer coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub(crate) fn remap(&self, nvars: usize, map: impl Fn(usize) -> usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.remap(&map), c.clone())))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        big.nvars = big.nvars.max(small.nvars);
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        out.nvars = out.nvars.max(rhs.nvars);
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars.max(rhs.nvars));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> Polynomial {
        Polynomial::var(i, 3)
    }

    fn int(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn square_of_sum() {
        let s = &x(0) + &x(1);
        let sq = &s * &s;
        assert_eq!(sq.len(), 3);
        assert_eq!(sq.degree(), 2);
        assert_eq!(sq.coeff(&Monomial::from_exponents(&[1, 1])), int(2));
        assert_eq!(sq.evaluate(&[int(1), int(1), int(0)]).unwrap(), int(4));
    }

    #[test]
    fn zero_cancels() {
        let p = &x(0) - &x(0);
        assert!(p.is_zero());
        assert_eq!(p.evaluate(&[int(5), int(-2), int(7)]).unwrap(), int(0));
    }

    #[test]
    fn evaluate_checks_length() {
        let p = x(0);
        assert_eq!(
            p.evaluate(&[int(1)]),
            Err(Error::LengthMismatch { expected: 3, got: 1 })
        );
    }

    #[test]
    fn linear_form_value() {
        // 2x1 - 7x2 + 4x3 at (3, 1, 1)
        let p = &(&x(0).scale(&int(2)) - &x(1).scale(&int(7))) + &x(2).scale(&int(4));
        assert_eq!(p.evaluate(&[int(3), int(1), int(1)]).unwrap(), int(3));
    }

    #[test]
    fn exact_division() {
        let a = &(&x(0) + &x(1)) * &(&x(0) - &x(2).scale(&int(3)));
        let b = &x(0) + &x(1);
        let q = a.exact_div(&b).unwrap();
        assert_eq!(q, &x(0) - &x(2).scale(&int(3)));
        assert!((&a + &Polynomial::one(3)).exact_div(&b).is_none());
        assert!(a.exact_div(&Polynomial::zero(3)).is_none());
        assert_eq!(a.exact_div(&a).unwrap(), Polynomial::one(3));
    }

    #[test]
    fn substitute_linear_examples() {
        // x3 * x0 with x3 -> 5 * x0 gives 5 x0^2
        let p = Polynomial::monomial(Monomial::from_powers([(0, 1), (3, 1)]), 1, 4);
        let mut b = BTreeMap::new();
        b.insert(3, LinearBinding::scaled(5, 0));
        let q = p.substitute_linear(&b).unwrap();
        assert_eq!(q, Polynomial::monomial(Monomial::from_powers([(0, 2)]), 5, 4));

        // constants: x0 + x1 with x0 -> 3, x1 -> 4
        let s = &Polynomial::var(0, 2) + &Polynomial::var(1, 2);
        let mut b = BTreeMap::new();
        b.insert(0, LinearBinding::constant(3));
        b.insert(1, LinearBinding::constant(4));
        assert_eq!(s.substitute_linear(&b).unwrap(), Polynomial::constant(7, 2));

        assert!(s.substitute_linear(&BTreeMap::new()).unwrap() == s);

        let mut bad = BTreeMap::new();
        bad.insert(5, LinearBinding::constant(1));
        assert_eq!(
            s.substitute_linear(&bad),
            Err(Error::BindingOutOfRange { var: 5, nvars: 2 })
        );
    }
}
