use super::PencilMatrix;
use crate::linalg::bareiss_determinant;
use crate::poly::Polynomial;

/// Exact determinant as a polynomial: cofactor expansion up to 4x4,
/// fraction-free elimination above.
pub fn symbolic_determinant(m: &PencilMatrix) -> Polynomial {
    let rows = m.to_poly_rows();
    if m.n() <= 4 {
        cofactor_determinant(&rows, m.nvars())
    } else {
        poly_matrix_determinant(rows, m.nvars())
    }
}

/// Fraction-free elimination regardless of size.
pub fn bareiss_symbolic_determinant(m: &PencilMatrix) -> Polynomial {
    poly_matrix_determinant(m.to_poly_rows(), m.nvars())
}

pub fn poly_matrix_determinant(rows: Vec<Vec<Polynomial>>, nvars: usize) -> Polynomial {
    bareiss_determinant(rows, Polynomial::one(nvars)).with_nvars(nvars)
}

/// Laplace expansion along the first row.
pub fn cofactor_determinant(rows: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = rows.len();
    match n {
        0 => return Polynomial::one(nvars),
        1 => return rows[0][0].clone().with_nvars(nvars),
        _ => {}
    }
    let mut total = Polynomial::zero(nvars);
    for c in 0..n {
        if rows[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(j, _)| j != c).map(|(_, x)| x.clone()).collect())
            .collect();
        let t = &rows[0][c] * &cofactor_determinant(&minor, nvars);
        total = if c % 2 == 0 { &total + &t } else { &total - &t };
    }
    total
}
