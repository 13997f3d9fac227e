use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{gcd_row_reduce, IntMatrix};
use crate::pencil::{AffineEntry, Form, PencilMatrix};

#[derive(Clone, Debug)]
pub struct RdrOutcome {
    pub pencil: PencilMatrix,
    /// Unimodular column transformation applied to the source before the
    /// trailing block was cut off.
    pub column_transform: IntMatrix,
    /// Number of constant rows eliminated.
    pub removed: usize,
    /// Factor folded into the first row: the trailing block's determinant
    /// times the transformation's sign.
    pub scale: BigInt,
}

pub fn rdr(t: &PencilMatrix) -> Result<PencilMatrix> {
    rdr_with_transform(t).map(|r| r.pencil)
}

fn apply_cols(e: &mut [Vec<AffineEntry>], m: &IntMatrix) {
    let s = m.rows();
    for row in e.iter_mut() {
        let old: Vec<AffineEntry> = row[..s].to_vec();
        for c in 0..s {
            let mut acc = AffineEntry::zero();
            for (q, o) in old.iter().enumerate() {
                acc = acc.add_scaled(o, &m[(q, c)]);
            }
            row[c] = acc;
        }
    }
}

fn apply_cols_int(t: &mut IntMatrix, m: &IntMatrix) {
    let s = m.rows();
    for r in 0..t.rows() {
        let old: Vec<BigInt> = t.row(r)[..s].to_vec();
        for c in 0..s {
            let mut acc = BigInt::zero();
            for (q, o) in old.iter().enumerate() {
                acc += o * &m[(q, c)];
            }
            t[(r, c)] = acc;
        }
    }
}

/// Reduced representation of a TDR.
///
/// Working from the last constant row up, a unimodular column combination
/// of the leading columns leaves only the row's gcd on its diagonal. The
/// trailing block is then upper triangular and the leading block above it
/// carries the determinant up to the product of those gcds, which is
/// multiplied into its first row.
pub fn rdr_with_transform(t: &PencilMatrix) -> Result<RdrOutcome> {
    if t.form() != Form::Tdr {
        return Err(Error::WrongForm {
            expected: Form::Tdr,
            found: t.form(),
        });
    }
    let n = t.n();
    let k = n - t
        .tdr_k()
        .ok_or_else(|| Error::Document("pencil tagged TDR is not triangular".into()))?;
    let mut transform = IntMatrix::identity(n);
    if k == 0 {
        return Ok(RdrOutcome {
            pencil: t.clone().retag(Form::Rdr),
            column_transform: transform,
            removed: 0,
            scale: BigInt::one(),
        });
    }

    let mut e: Vec<Vec<AffineEntry>> = t.entries().to_vec();
    let mut scale = BigInt::one();
    for step in 0..k {
        let r = n - 1 - step;
        let seg: Vec<BigInt> = e[r][..=r].iter().map(|x| x.constant_part().clone()).collect();
        let (g, w) = match gcd_row_reduce(&seg) {
            Ok(found) => found,
            Err(Error::ZeroVector) => {
                return Ok(RdrOutcome {
                    pencil: PencilMatrix::from_parts(Form::Rdr, t.nvars(), vec![vec![AffineEntry::zero()]], vec![None]),
                    column_transform: transform,
                    removed: n - 1,
                    scale: BigInt::zero(),
                })
            }
            Err(other) => return Err(other),
        };
        apply_cols(&mut e, &w.forward);
        apply_cols_int(&mut transform, &w.forward);
        scale *= g;
        if w.parity < 0 {
            scale = -scale;
        }
    }
    debug_assert!(
        transform.determinant().map(|d| d.abs().is_one()).unwrap_or(false),
        "column transform is unimodular"
    );

    let keep = n - k;
    if keep == 0 {
        return Ok(RdrOutcome {
            pencil: PencilMatrix::from_parts(Form::Rdr, t.nvars(), vec![vec![AffineEntry::constant(scale.clone())]], vec![None]),
            column_transform: transform,
            removed: n - 1,
            scale,
        });
    }
    let mut block: Vec<Vec<AffineEntry>> = e[..keep].iter().map(|row| row[..keep].to_vec()).collect();
    for x in block[0].iter_mut() {
        *x = x.scale(&scale);
    }
    Ok(RdrOutcome {
        pencil: PencilMatrix::new(Form::Rdr, t.nvars(), block)?,
        column_transform: transform,
        removed: k,
        scale,
    })
}
