//! Fraction-free Gaussian elimination shared by integer and polynomial
//! determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::poly::Polynomial;

/// Integral domain with exact division, enough for Bareiss elimination.
pub trait BareissRing: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Self;
    /// Division known to be exact.
    fn div_exact(&self, d: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl BareissRing for BigInt {
    fn zero_like(&self) -> Self {
        BigInt::zero()
    }
    fn one_like(&self) -> Self {
        BigInt::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    /// `self * a - b * c`
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Self {
        self * a - b * c
    }
    fn div_exact(&self, d: &Self) -> Self {
        debug_assert!((self % d).is_zero());
        self / d
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl BareissRing for Polynomial {
    fn zero_like(&self) -> Self {
        Polynomial::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        Polynomial::one(self.nvars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn mul_sub(&self, a: &Self, b: &Self, c: &Self) -> Self {
        &(self * a) - &(b * c)
    }
    fn div_exact(&self, d: &Self) -> Self {
        self.exact_div(d).expect("Bareiss quotient is exact")
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Determinant of a square matrix given as rows. An empty matrix has
/// determinant `one`.
pub fn bareiss_determinant<R: BareissRing>(mut m: Vec<Vec<R>>, one: R) -> R {
    let n = m.len();
    if n == 0 {
        return one;
    }
    let mut negate = false;
    let mut prev = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero_elem() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero_elem()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return m[0][0].zero_like(),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pivot = &pivot_row[k];
        for row in bottom.iter_mut() {
            for j in k + 1..n {
                row[j] = row[j].mul_sub(pivot, &row[k], &pivot_row[j]).div_exact(&prev);
            }
            row[k] = row[k].zero_like();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.negate()
    } else {
        d
    }
}
