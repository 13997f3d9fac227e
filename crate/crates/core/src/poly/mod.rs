//! Exact multivariate polynomials over the integers.

mod format;
mod monomial;
mod parse;
mod polynomial;
mod symbolic;

pub use format::{default_names, from_json, to_json, to_latex, to_text, PolynomialDoc, TermDoc};
pub use monomial::Monomial;
pub use parse::{parse_coeff_polynomial, parse_polynomial, ParsedPolynomial};
pub use polynomial::{LinearBinding, Polynomial};
pub use symbolic::{CoeffPolynomial, Coefficient};
