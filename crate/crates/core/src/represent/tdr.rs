use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::SplitPencil;
use crate::error::{Error, Result};
use crate::linalg::{gcd_row_reduce, IntMatrix};
use crate::pencil::{Form, PencilMatrix};

/// A triangular representation together with the unimodular matrices
/// realizing it: `pencil = left * source * right`.
#[derive(Clone, Debug)]
pub struct TdrOutcome {
    pub pencil: PencilMatrix,
    pub left: IntMatrix,
    pub right: IntMatrix,
    /// Rows carrying no variable, all at the bottom.
    pub constant_rows: usize,
}

pub fn tdr(n: &PencilMatrix) -> Result<PencilMatrix> {
    tdr_with_transforms(n).map(|t| t.pencil)
}

struct State {
    s: SplitPencil,
    left: IntMatrix,
    right: IntMatrix,
    negative: bool,
}

impl State {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.s.a.swap_rows(i, j);
            self.s.b.swap_rows(i, j);
            self.left.swap_rows(i, j);
            self.negative = !self.negative;
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            self.s.a.swap_cols(i, j);
            self.s.b.swap_cols(i, j);
            self.s.vars.swap(i, j);
            self.right.swap_cols(i, j);
            self.negative = !self.negative;
        }
    }

    fn row_sub_mul(&mut self, dst: usize, src: usize, q: &BigInt) {
        self.s.a.row_sub_mul(dst, src, q);
        self.s.b.row_sub_mul(dst, src, q);
        self.left.row_sub_mul(dst, src, q);
    }

    /// Replaces rows `start..start + w.rows()` by `w` times themselves.
    fn combine_rows(&mut self, start: usize, w: &IntMatrix) {
        for m in [&mut self.s.a, &mut self.s.b, &mut self.left] {
            apply_rows(m, start, w);
        }
    }
}

pub(crate) fn apply_rows(m: &mut IntMatrix, start: usize, w: &IntMatrix) {
    let s = w.rows();
    for c in 0..m.cols() {
        let old: Vec<BigInt> = (0..s).map(|q| m[(start + q, c)].clone()).collect();
        for p in 0..s {
            let mut acc = BigInt::zero();
            for (q, o) in old.iter().enumerate() {
                if !w[(p, q)].is_zero() && !o.is_zero() {
                    acc += &w[(p, q)] * o;
                }
            }
            m[(start + p, c)] = acc;
        }
    }
}

/// Triangular determinantal representation of an NDR.
///
/// Column by column: rows without a variable rotate to the bottom, the
/// column with the smallest variable coefficient in the current row moves
/// onto the diagonal, a unimodular row combination leaves the gcd of the
/// column's coefficients on the diagonal and zeros below it, and the
/// coefficients above are reduced modulo the diagonal. A final negation of
/// the first column restores the determinant's sign.
pub fn tdr_with_transforms(n: &PencilMatrix) -> Result<TdrOutcome> {
    if n.form() != Form::Ndr {
        return Err(Error::WrongForm {
            expected: Form::Ndr,
            found: n.form(),
        });
    }
    let s = SplitPencil::from_pencil(n)?;
    let dim = s.n();
    let mut st = State {
        s,
        left: IntMatrix::identity(dim),
        right: IntMatrix::identity(dim),
        negative: false,
    };

    let mut bottom = dim;
    let mut i = 0;
    while i < bottom {
        if st.s.b_row_is_zero(i) {
            for r in i..dim - 1 {
                st.swap_rows(r, r + 1);
            }
            bottom -= 1;
            continue;
        }
        let pivot_col = (i..dim)
            .filter(|&c| !st.s.b[(i, c)].is_zero())
            .min_by(|&x, &y| st.s.b[(i, x)].abs().cmp(&st.s.b[(i, y)].abs()).then(x.cmp(&y)))
            .expect("row has a variable");
        st.swap_cols(i, pivot_col);

        let seg: Vec<BigInt> = (i..bottom).map(|r| st.s.b[(r, i)].clone()).collect();
        let (_, w) = gcd_row_reduce(&seg)?;
        st.combine_rows(i, &w.forward.transpose());
        if w.parity < 0 {
            st.negative = !st.negative;
        }
        st.swap_rows(i, bottom - 1);

        let d = st.s.b[(i, i)].clone();
        debug_assert!(d.is_positive());
        for k in 0..i {
            let q = &st.s.b[(k, i)] / &d;
            if !q.is_zero() {
                st.row_sub_mul(k, i, &q);
            }
        }
        i += 1;
    }
    if st.negative {
        st.s.a.negate_col(0);
        st.s.b.negate_col(0);
        st.right.negate_col(0);
    }
    debug_assert!(
        st.left.determinant().map(|d| d.abs().is_one()).unwrap_or(false)
            && st.right.determinant().map(|d| d.abs().is_one()).unwrap_or(false),
        "row and column transforms are unimodular"
    );
    Ok(TdrOutcome {
        pencil: st.s.to_pencil(Form::Tdr),
        left: st.left,
        right: st.right,
        constant_rows: dim - bottom,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chains::{chain_form, improved_chain_form};
    use crate::pencil::symbolic_determinant;
    use crate::poly::parse_polynomial;
    use crate::represent::ndr;

    fn run(src: &str, plain: bool) -> (PencilMatrix, TdrOutcome) {
        let p = parse_polynomial(src, None).unwrap().poly;
        let cf = if plain { chain_form(&p) } else { improved_chain_form(&p) }.unwrap();
        let n = ndr(&cf).unwrap();
        let t = tdr_with_transforms(&n).unwrap();
        assert_eq!(symbolic_determinant(&t.pencil), p, "{src}");
        assert_eq!(t.pencil.tdr_k(), Some(t.pencil.n() - t.constant_rows), "{src}");
        (n, t)
    }

    #[test]
    fn square_of_sum() {
        for plain in [true, false] {
            run("x1^2 + 2*x1*x2 + x2^2", plain);
        }
    }

    #[test]
    fn transforms_reproduce_output() {
        let (n, t) = run("3*x1^2*x2 - x1*x2 + 5*x2^2 - 2", false);
        let a = SplitPencil::from_pencil(&n).unwrap();
        let out = SplitPencil::from_pencil(&t.pencil).unwrap();
        assert_eq!(&(&t.left * &a.a) * &t.right, out.a);
        assert_eq!(&(&t.left * &a.b) * &t.right, out.b);
        let one = BigInt::one();
        assert_eq!(&t.left.determinant().unwrap() * &t.right.determinant().unwrap(), one);
    }

    #[test]
    fn constant_input_is_unchanged() {
        let (n, t) = run("7", true);
        assert_eq!(t.pencil.entries(), n.entries());
        assert_eq!(t.constant_rows, 1);
    }

    #[test]
    fn requires_ndr_tag() {
        let p = parse_polynomial("x1*x2 + 1", None).unwrap().poly;
        let n = ndr(&chain_form(&p).unwrap()).unwrap().retag(Form::Raw);
        assert_eq!(
            tdr(&n).unwrap_err(),
            Error::WrongForm {
                expected: Form::Ndr,
                found: Form::Raw
            }
        );
    }
}
