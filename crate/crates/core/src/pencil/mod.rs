//! Square matrices with affine integer entries.

mod affine;
mod determinant;
mod io;
mod verify;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::poly::Polynomial;

pub use affine::AffineEntry;
pub use determinant::{bareiss_symbolic_determinant, cofactor_determinant, poly_matrix_determinant, symbolic_determinant};
pub(crate) use io::{format_bmatrix, format_grid};
pub use io::{pencil_from_json, pencil_to_json, pencil_to_latex, pencil_to_text};
pub use verify::{eval_determinant_check, eval_determinant_check_with, sample_points, Execution, PointEvaluate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Form {
    Ndr,
    Tdr,
    Rdr,
    Udr,
    Raw,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Form::Ndr => "NDR",
            Form::Tdr => "TDR",
            Form::Rdr => "RDR",
            Form::Udr => "UDR",
            Form::Raw => "RAW",
        })
    }
}

impl FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Form> {
        match s.to_ascii_uppercase().as_str() {
            "NDR" => Ok(Form::Ndr),
            "TDR" => Ok(Form::Tdr),
            "RDR" => Ok(Form::Rdr),
            "UDR" => Ok(Form::Udr),
            "RAW" => Ok(Form::Raw),
            _ => Err(Error::Document(format!("unknown form `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PencilMatrix {
    form: Form,
    nvars: usize,
    entries: Vec<Vec<AffineEntry>>,
    column_vars: Vec<Option<usize>>,
}

impl PencilMatrix {
    /// Square matrix over `nvars` variables (raised to cover every entry).
    /// Column variables are derived: a column whose linear parts use a
    /// single variable records it.
    pub fn new(form: Form, nvars: usize, entries: Vec<Vec<AffineEntry>>) -> Result<Self> {
        let n = entries.len();
        if let Some(row) = entries.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare { rows: n, cols: row.len() });
        }
        let bound = entries.iter().flatten().map(AffineEntry::var_bound).max().unwrap_or(0);
        let column_vars = (0..n).map(|c| single_column_var(&entries, c)).collect();
        Ok(PencilMatrix {
            form,
            nvars: nvars.max(bound),
            entries,
            column_vars,
        })
    }

    pub(crate) fn from_parts(
        form: Form,
        nvars: usize,
        entries: Vec<Vec<AffineEntry>>,
        column_vars: Vec<Option<usize>>,
    ) -> Self {
        debug_assert_eq!(entries.len(), column_vars.len());
        PencilMatrix {
            form,
            nvars,
            entries,
            column_vars,
        }
    }

    pub fn from_int_matrix(m: &IntMatrix, nvars: usize, form: Form) -> Self {
        assert!(m.is_square());
        let entries = (0..m.rows())
            .map(|r| m.row(r).iter().map(|c| AffineEntry::constant(c.clone())).collect())
            .collect();
        PencilMatrix {
            form,
            nvars,
            entries,
            column_vars: vec![None; m.rows()],
        }
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn retag(mut self, form: Form) -> Self {
        self.form = form;
        self
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn with_nvars(mut self, nvars: usize) -> Self {
        self.nvars = self.nvars.max(nvars);
        self
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<AffineEntry>] {
        &self.entries
    }

    pub fn entry(&self, r: usize, c: usize) -> &AffineEntry {
        &self.entries[r][c]
    }

    pub fn column_vars(&self) -> &[Option<usize>] {
        &self.column_vars
    }

    pub fn is_constant_row(&self, r: usize) -> bool {
        self.entries[r].iter().all(AffineEntry::is_constant)
    }

    pub fn constant_row_count(&self) -> usize {
        (0..self.n()).filter(|&r| self.is_constant_row(r)).count()
    }

    pub fn is_all_constant(&self) -> bool {
        self.entries.iter().flatten().all(AffineEntry::is_constant)
    }

    pub fn to_int_matrix(&self) -> Option<IntMatrix> {
        let n = self.n();
        let mut data = Vec::with_capacity(n * n);
        for e in self.entries.iter().flatten() {
            if !e.is_constant() {
                return None;
            }
            data.push(e.constant_part().clone());
        }
        Some(IntMatrix::new(n, n, data))
    }

    pub fn to_poly_rows(&self) -> Vec<Vec<Polynomial>> {
        self.entries
            .iter()
            .map(|row| row.iter().map(|e| e.to_polynomial(self.nvars)).collect())
            .collect()
    }

    /// Integer matrix at `point`; missing coordinates read as an error in the
    /// caller, so `point` must cover `nvars`.
    pub fn evaluate(&self, point: &[BigInt]) -> IntMatrix {
        let n = self.n();
        let data = self.entries.iter().flatten().map(|e| e.eval(point)).collect();
        IntMatrix::new(n, n, data)
    }

    /// Every column's linear parts use at most one variable, matching the
    /// recorded column variable when there is one.
    pub fn is_ndr(&self) -> bool {
        (0..self.n()).all(|c| {
            let mut vars = self.entries.iter().flat_map(|row| row[c].linear().keys().copied());
            match self.column_vars[c] {
                Some(v) => vars.all(|u| u == v),
                None => vars.next().is_none(),
            }
        })
    }

    /// Coefficient of column `c`'s variable in entry `(r, c)`.
    pub fn column_coeff(&self, r: usize, c: usize) -> BigInt {
        match self.column_vars[c] {
            Some(v) => self.entries[r][c].coeff_of(v),
            None => BigInt::default(),
        }
    }

    /// The `k` witnessing the triangular shape, or `None`.
    ///
    /// Rows `k..` are constant, the leading diagonal coefficients are
    /// non-zero, the first `k` columns are constant below the diagonal and
    /// their coefficients above it are smaller in absolute value than the
    /// diagonal one.
    pub fn tdr_k(&self) -> Option<usize> {
        if !self.is_ndr() {
            return None;
        }
        let n = self.n();
        let k = (0..n).rev().find(|&r| !self.is_constant_row(r)).map_or(0, |r| r + 1);
        for i in 0..k {
            let d = self.column_coeff(i, i).abs();
            if d == BigInt::default() {
                return None;
            }
            if (i + 1..n).any(|j| !self.entries[j][i].is_constant()) {
                return None;
            }
            if (0..i).any(|j| self.column_coeff(j, i).abs() >= d) {
                return None;
            }
        }
        Some(k)
    }

    pub fn is_tdr(&self) -> bool {
        self.tdr_k().is_some()
    }
}

fn single_column_var(entries: &[Vec<AffineEntry>], c: usize) -> Option<usize> {
    let mut found = None;
    for row in entries {
        for &v in row[c].linear().keys() {
            match found {
                None => found = Some(v),
                Some(u) if u == v => {}
                Some(_) => return None,
            }
        }
    }
    found
}

impl PointEvaluate for PencilMatrix {
    fn point_nvars(&self) -> usize {
        self.nvars
    }

    fn evaluate_at(&self, point: &[BigInt]) -> IntMatrix {
        self.evaluate(point)
    }
}
