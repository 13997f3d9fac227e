//! Generalized Euclid over integer vectors and the unit-determinant
//! constructions built on it.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;
use crate::error::{Error, Result};

/// Accumulated unimodular transformation with its determinant sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnimodularWitness {
    pub forward: IntMatrix,
    /// Determinant of `forward`, always `1` or `-1`.
    pub parity: i8,
}

impl UnimodularWitness {
    pub fn identity(n: usize) -> Self {
        UnimodularWitness {
            forward: IntMatrix::identity(n),
            parity: 1,
        }
    }
}

/// Reduces `a` to `(0, ..., 0, g)` by integer column operations, returning
/// `g = gcd(a) > 0` and the transformation `M` with `a * M = (0, ..., 0, g)`.
///
/// Repeatedly takes the smallest non-zero entry (lowest index on ties) and
/// replaces every other non-zero entry by its remainder against it; a
/// non-zero remainder becomes the new smallest entry and the pass restarts.
/// The survivor is swapped into the last slot and made positive.
pub fn gcd_row_reduce(a: &[BigInt]) -> Result<(BigInt, UnimodularWitness)> {
    let n = a.len();
    let mut v = a.to_vec();
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let mut m = IntMatrix::identity(n);
    let mut parity: i8 = 1;

    let mut pivot = (0..n)
        .filter(|&i| !v[i].is_zero())
        .min_by(|&i, &j| v[i].abs().cmp(&v[j].abs()).then(i.cmp(&j)))
        .expect("non-zero entry exists");

    'restart: loop {
        for r in 0..n {
            if r == pivot || v[r].is_zero() {
                continue;
            }
            let q = &v[r] / &v[pivot];
            let t = &q * &v[pivot];
            v[r] -= t;
            m.col_sub_mul(r, pivot, &q);
            if !v[r].is_zero() {
                pivot = r;
                continue 'restart;
            }
        }
        break;
    }

    if pivot != n - 1 {
        v.swap(pivot, n - 1);
        m.swap_cols(pivot, n - 1);
        parity = -parity;
    }
    if v[n - 1].is_negative() {
        v[n - 1] = -&v[n - 1];
        m.negate_col(n - 1);
        parity = -parity;
    }
    debug_assert!(v[..n - 1].iter().all(Zero::is_zero));
    Ok((v[n - 1].clone(), UnimodularWitness { forward: m, parity }))
}

/// Forces determinant `+1` by negating the first column when needed.
///
/// For vectors of length at least two that column multiplies to zero
/// against the reduced vector, so `a * M` keeps its last entry.
pub fn normalize_sign(w: UnimodularWitness) -> UnimodularWitness {
    if w.parity == 1 {
        return w;
    }
    let mut forward = w.forward;
    forward.negate_col(0);
    UnimodularWitness { forward, parity: 1 }
}

/// Integer inverse of a unimodular matrix via the adjugate.
pub fn invert_unimodular(m: &IntMatrix) -> Result<IntMatrix> {
    let det = m.determinant()?;
    if det.abs() != BigInt::one() {
        return Err(Error::NotUnimodular(det));
    }
    let n = m.rows();
    if n == 1 {
        return Ok(IntMatrix::from_rows(&[vec![det]]));
    }
    let mut inv = IntMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            let cof = m.minor(r, c).determinant()?;
            let signed = if (r + c).is_odd() { -cof } else { cof };
            // adj = cofactor^T, and dividing by +-1 is multiplying by it
            inv[(c, r)] = signed * &det;
        }
    }
    Ok(inv)
}

/// Integer `(n-1) x n` matrix `B` with `det [B; a] = +1`; needs `gcd(a) = 1`.
pub fn solve_unit_determinant(a: &[BigInt]) -> Result<IntMatrix> {
    let n = a.len();
    if n < 2 {
        return Err(Error::TooShort(n));
    }
    let (g, w) = gcd_row_reduce(a)?;
    if !g.is_one() {
        return Err(Error::GcdNotOne(g));
    }
    let inv = invert_unimodular(&normalize_sign(w).forward)?;
    debug_assert_eq!(inv.row(n - 1), a);
    Ok(inv.row_block(0..n - 1))
}

/// Integer `(n-1) x n` matrix `A` such that `det [A; (x_1 .. x_n)]` equals
/// `a_1 x_1 + ... + a_n x_n`.
///
/// Built from the first `n-1` rows of `M^T` for the primitive vector `a/g`;
/// the gcd is then folded back into the first row.
pub fn linear_form_matrix(a: &[BigInt]) -> Result<IntMatrix> {
    let n = a.len();
    if n < 2 {
        return if a.iter().all(Zero::is_zero) {
            Err(Error::ZeroVector)
        } else {
            Err(Error::TooShort(n))
        };
    }
    let (g, _) = gcd_row_reduce(a)?;
    let primitive: Vec<BigInt> = a.iter().map(|x| x / &g).collect();
    let (_, w) = gcd_row_reduce(&primitive)?;
    let mt = normalize_sign(w).forward.transpose();
    let mut out = mt.row_block(0..n - 1);
    if !g.is_one() {
        out.scale_row(0, &g);
    }
    Ok(out)
}
