#![allow(dead_code)]

use std::collections::BTreeSet;

use detrep::linalg::IntMatrix;
use detrep::pencil::{AffineEntry, Form, PencilMatrix};
use detrep::poly::{parse_polynomial, Monomial, Polynomial};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEXTIC_WITH_CONSTANT: &str =
    "3*x1^3*x2^2 - 4*x1^2*x2^3 + x1^2*x2^2 - 5*x1*x2^2 + 2*x1^3 + 2*x1*x2 + 2";
pub const SEXTIC: &str = "3*x1^3*x2^2 - 4*x1^2*x2^3 + x1^2*x2^2 - 5*x1*x2^2 + 2*x1^3 + 2*x1*x2";
pub const SQUARE: &str = "x1^2 + 2*x1*x2 + x2^2";
pub const TRIVARIATE_QUADRIC: &str = "[c200]*x1^2 + [c110]*x1*x2 + [c101]*x1*x3 + [c020]*x2^2 \
     + [c011]*x2*x3 + [c002]*x3^2 + [c100]*x1 + [c010]*x2 + [c001]*x3 + [c000]";
pub const BIVARIATE_QUARTIC: &str = "[c40]*x1^4 + [c31]*x1^3*x2 + [c22]*x1^2*x2^2 + [c13]*x1*x2^3 \
     + [c04]*x2^4 + [c30]*x1^3 + [c21]*x1^2*x2 + [c12]*x1*x2^2 + [c03]*x2^3 + [c20]*x1^2 \
     + [c11]*x1*x2 + [c02]*x2^2 + [c10]*x1 + [c01]*x2 + [c00]";
pub const FIVE_VARIABLE_QUARTIC: &str =
    "3*x1^2*x2*x3 + 4*x1*x2*x3 + 5*x2^2*x4 + 6*x2*x3*x4 + 7*x3*x4 + 8*x5^4 + 2";

/// Published triangular form of `SEXTIC`.
pub const TRIANGULAR_8X8: [&str; 8] = [
    "-x1 - 1 & 1 & 1 & 0 & 0 & 0 & -x2 & 0",
    "-5 & x1 & 5 & 0 & 0 & -1 & 0 & 0",
    "0 & 0 & x1 & -1 & 0 & 0 & 0 & 0",
    "0 & 0 & 0 & x1 & -1 & 0 & 0 & x2",
    "0 & 0 & 0 & 0 & x1 & 0 & 0 & 1",
    "2 & 0 & -2 & 0 & 0 & x2 & 0 & -1",
    "-2 & 0 & 3 & 0 & 0 & 0 & 0 & 0",
    "-4 & 0 & 4 & 0 & 0 & 0 & -1 & 0",
];

/// Published reduced form of `SEXTIC`.
pub const REDUCED_6X6: [&str; 6] = [
    "3x1 - 4x2 + 1 & 1 & 0 & 0 & 0 & 0",
    "5 & x1 & 0 & 0 & 0 & 1",
    "-2x1 & 0 & 0 & -1 & 0 & 0",
    "0 & 0 & -x2 & x1 & -1 & 0",
    "0 & 0 & 0 & 0 & x1 & 0",
    "-2 & 0 & 1 & 0 & 0 & -x2",
];

/// Published normal forms of `SQUARE`, from the plain and improved chain-forms.
pub const NORMAL_6X6: [&str; 6] = [
    "-1 & 0 & 0 & 0 & 1 & 0",
    "-x1 & 1 & 0 & 0 & 0 & 0",
    "0 & 0 & 1 & 0 & -2 & 0",
    "0 & 0 & -x1 & 1 & 0 & 0",
    "0 & 0 & 0 & 0 & -x2 & 1",
    "0 & x1 & 0 & x2 & 0 & x2",
];

pub const NORMAL_5X5: [&str; 5] = [
    "1 & 0 & 0 & -1 & 0",
    "0 & 0 & 1 & -2 & 0",
    "-x1 & 1 & -x2 & 0 & 0",
    "0 & 0 & 0 & -x2 & 1",
    "0 & x1 & 0 & 0 & x2",
];

pub fn names(k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("x{i}")).collect()
}

pub fn poly(src: &str) -> Polynomial {
    parse_polynomial(src, None).unwrap().poly
}

pub fn poly_in(src: &str, k: usize) -> Polynomial {
    parse_polynomial(src, Some(&names(k))).unwrap().poly.with_nvars(k)
}

/// Rows of `&`-separated affine entries over `x1..xk`.
pub fn pencil_from_rows(rows: &[&str], k: usize, form: Form) -> PencilMatrix {
    let order = names(k);
    let cells = rows
        .iter()
        .map(|row| {
            row.split('&')
                .map(|cell| {
                    let p = parse_polynomial(cell.trim(), Some(&order)).unwrap().poly;
                    AffineEntry::from_polynomial(&p).expect("affine entry")
                })
                .collect()
        })
        .collect();
    PencilMatrix::new(form, k, cells).unwrap()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, bool)> {
    if n == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            // inserting at pos passes n-1-pos elements
            out.push((q, odd ^ ((n - 1 - pos) % 2 == 1)));
        }
    }
    out
}

/// Leibniz expansion, independent of the library's determinant code.
pub fn leibniz(rows: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = rows.len();
    let mut total = Polynomial::zero(nvars);
    for (perm, odd) in permutations(n) {
        let mut t = Polynomial::one(nvars);
        for (r, &c) in perm.iter().enumerate() {
            if rows[r][c].is_zero() {
                t = Polynomial::zero(nvars);
                break;
            }
            t = &t * &rows[r][c];
        }
        total = if odd { &total - &t } else { &total + &t };
    }
    total
}

pub fn leibniz_int(m: &IntMatrix) -> BigInt {
    let rows: Vec<Vec<Polynomial>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(|c| Polynomial::constant(c, 0)).collect())
        .collect();
    leibniz(&rows, 0).constant_term()
}

pub fn oracle_determinant(m: &PencilMatrix) -> Polynomial {
    leibniz(&m.to_poly_rows(), m.nvars())
}

/// Random polynomial: 1-4 variables, total degree <= 4, 1-8 distinct
/// terms, non-zero coefficients in [-20, 20].
pub fn random_polynomial(rng: &mut ChaCha8Rng) -> Polynomial {
    let k = rng.gen_range(1..=4usize);
    let want = rng.gen_range(1..=8usize);
    let mut monomials = BTreeSet::new();
    for _ in 0..want * 4 {
        if monomials.len() == want {
            break;
        }
        let d = rng.gen_range(0..=4u32);
        let mut exps = vec![0u32; k];
        for _ in 0..d {
            exps[rng.gen_range(0..k)] += 1;
        }
        monomials.insert(Monomial::from_exponents(&exps));
    }
    Polynomial::from_terms(
        k,
        monomials.into_iter().map(|m| {
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-20..=20);
            }
            (m, BigInt::from(c))
        }),
    )
}

pub fn corpus_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
