use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::pencil::{AffineEntry, Form, PencilMatrix};

/// `N = A + B`: constants in `A`, and in `B` the coefficient of each
/// column's single variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPencil {
    pub a: IntMatrix,
    pub b: IntMatrix,
    pub vars: Vec<Option<usize>>,
    pub nvars: usize,
}

impl SplitPencil {
    /// Needs every column to carry at most one variable.
    pub fn from_pencil(m: &PencilMatrix) -> Result<Self> {
        if !m.is_ndr() {
            return Err(Error::WrongForm {
                expected: Form::Ndr,
                found: m.form(),
            });
        }
        let n = m.n();
        let mut a = IntMatrix::zeros(n, n);
        let mut b = IntMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                a[(r, c)] = m.entry(r, c).constant_part().clone();
                b[(r, c)] = m.column_coeff(r, c);
            }
        }
        Ok(SplitPencil {
            a,
            b,
            vars: m.column_vars().to_vec(),
            nvars: m.nvars(),
        })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn b_row_is_zero(&self, r: usize) -> bool {
        self.b.row(r).iter().all(Zero::is_zero)
    }

    pub fn to_pencil(&self, form: Form) -> PencilMatrix {
        let n = self.n();
        let entries = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| {
                        let lin: Vec<(usize, BigInt)> = match self.vars[c] {
                            Some(v) => vec![(v, self.b[(r, c)].clone())],
                            None => Vec::new(),
                        };
                        AffineEntry::new(self.a[(r, c)].clone(), lin)
                    })
                    .collect()
            })
            .collect();
        let vars = (0..n)
            .map(|c| self.vars[c].filter(|_| (0..n).any(|r| !self.b[(r, c)].is_zero())))
            .collect();
        PencilMatrix::from_parts(form, self.nvars, entries, vars)
    }
}
