//! Exact integer matrices and unimodular transformations.

mod bareiss;
mod matrix;
mod unimodular;

pub use bareiss::{bareiss_determinant, BareissRing};
pub use matrix::IntMatrix;
pub use unimodular::{
    gcd_row_reduce, invert_unimodular, linear_form_matrix, normalize_sign, solve_unit_determinant,
    UnimodularWitness,
};
