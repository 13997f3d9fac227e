use num_traits::Zero;

use crate::chains::ChainForm;
use crate::error::{Error, Result};
use crate::linalg::linear_form_matrix;
use crate::pencil::{AffineEntry, Form, PencilMatrix};

/// The 1x1 representation `[0]` of the zero polynomial.
pub fn zero_pencil(nvars: usize, form: Form) -> PencilMatrix {
    PencilMatrix::from_parts(form, nvars, vec![vec![AffineEntry::zero()]], vec![None])
}

/// Normal determinantal representation of a chain-form.
///
/// Stacks the linear-form matrix of the coefficients over the monomial row,
/// then for each entry with a successor `j` under `x_v` replaces column `i`
/// by `col_i - x_v * col_j`. The monomial row entry of column `i` cancels,
/// leaving every entry affine in `x_v`.
pub fn ndr(cf: &ChainForm) -> Result<PencilMatrix> {
    let n = cf.len();
    let entries = cf.entries();
    if n == 0 {
        return Err(Error::EmptyChainForm);
    }
    if n == 1 {
        let e = &entries[0];
        let cell = match e.monomial.as_var() {
            Some(v) => AffineEntry::term(v, e.coeff.clone()),
            None if e.monomial.is_one() => AffineEntry::constant(e.coeff.clone()),
            None => return Err(Error::Document("single chain entry of degree > 1".into())),
        };
        return Ok(PencilMatrix::new(Form::Ndr, cf.nvars(), vec![vec![cell]])?.retag(Form::Ndr));
    }

    let a = linear_form_matrix(&cf.coefficients())?;
    let mut cells: Vec<Vec<AffineEntry>> = (0..n - 1)
        .map(|r| a.row(r).iter().map(|c| AffineEntry::constant(c.clone())).collect())
        .collect();
    cells.push(
        entries
            .iter()
            .map(|e| match e.monomial.degree() {
                0 => AffineEntry::constant(1),
                1 => AffineEntry::term(e.monomial.as_var().expect("degree 1"), 1),
                // cancelled by the column operation below
                _ => AffineEntry::zero(),
            })
            .collect(),
    );
    let mut column_vars = vec![None; n];
    for (i, e) in entries.iter().enumerate() {
        if let Some(s) = e.successor {
            // column s.index is untouched so far: it is processed later
            for row in cells.iter_mut().take(n - 1) {
                let src = row[s.index].constant_part().clone();
                if !src.is_zero() {
                    row[i] = row[i].add_scaled(&AffineEntry::term(s.var, 1), &-src);
                }
            }
            column_vars[i] = Some(s.var);
        } else if let Some(v) = e.monomial.as_var() {
            column_vars[i] = Some(v);
        }
    }
    let column_vars = (0..n)
        .map(|c| column_vars[c].filter(|_| cells.iter().any(|row| !row[c].is_constant())))
        .collect();
    Ok(PencilMatrix::from_parts(Form::Ndr, cf.nvars(), cells, column_vars))
}
