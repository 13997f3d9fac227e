use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::PencilMatrix;
use crate::linalg::{bareiss_determinant, IntMatrix};
use crate::poly::Polynomial;

const COORD_BOUND: i64 = 1_000_000;

/// Anything that becomes an integer matrix at a point.
pub trait PointEvaluate {
    fn point_nvars(&self) -> usize;
    fn evaluate_at(&self, point: &[BigInt]) -> IntMatrix;
}

/// How the independent trials of a check are run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `trials` points with coordinates uniform in `[-10^6, 10^6]`, fixed by `seed`.
pub fn sample_points(nvars: usize, trials: usize, seed: u64) -> Vec<Vec<BigInt>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials)
        .map(|_| (0..nvars).map(|_| BigInt::from(rng.gen_range(-COORD_BOUND..=COORD_BOUND))).collect())
        .collect()
}

pub fn eval_determinant_check(m: &PencilMatrix, p: &Polynomial, trials: usize, seed: u64) -> bool {
    eval_determinant_check_with(m, p, trials, seed, Execution::default())
}

/// True iff `det m(pt) = p(pt)` at every sampled point.
pub fn eval_determinant_check_with<M: PointEvaluate + Sync>(
    m: &M,
    p: &Polynomial,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> bool {
    assert!(trials >= 1, "at least one trial");
    let nvars = m.point_nvars().max(p.nvars());
    let points = sample_points(nvars, trials, seed);
    let agrees = |pt: &Vec<BigInt>| {
        let det = bareiss_determinant(m.evaluate_at(pt).to_rows(), BigInt::from(1));
        det == p.eval_unchecked(pt)
    };
    match exec {
        Execution::Sequential => points.iter().all(agrees),
        Execution::Parallel => parallel_all(&points, agrees),
    }
}

#[cfg(feature = "parallel")]
fn parallel_all<F: Fn(&Vec<BigInt>) -> bool + Sync + Send>(points: &[Vec<BigInt>], f: F) -> bool {
    use rayon::prelude::*;
    points.par_iter().all(f)
}

#[cfg(not(feature = "parallel"))]
fn parallel_all<F: Fn(&Vec<BigInt>) -> bool + Sync + Send>(points: &[Vec<BigInt>], f: F) -> bool {
    points.iter().all(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::{symbolic_determinant, AffineEntry, Form};

    fn sample() -> PencilMatrix {
        let x = |v| AffineEntry::term(v, 1);
        let k = |c: i64| AffineEntry::constant(c);
        PencilMatrix::new(
            Form::Raw,
            3,
            vec![
                vec![x(0), k(2), k(0)],
                vec![k(-1), x(1), AffineEntry::new(3, [(2, BigInt::from(4))])],
                vec![k(5), k(0), x(2)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn consistent_with_symbolic() {
        let m = sample();
        let p = symbolic_determinant(&m);
        for exec in [Execution::Sequential, Execution::Parallel] {
            assert!(eval_determinant_check_with(&m, &p, 20, 7, exec));
        }
    }

    #[test]
    fn catches_perturbation() {
        let m = sample();
        let p = symbolic_determinant(&m);
        let mut rows = m.entries().to_vec();
        rows[1][0] = AffineEntry::constant(0);
        let bad = PencilMatrix::new(Form::Raw, 3, rows).unwrap();
        assert!(!eval_determinant_check(&bad, &p, 20, 0));
    }

    #[test]
    fn points_are_reproducible() {
        assert_eq!(sample_points(3, 4, 11), sample_points(3, 4, 11));
        assert_ne!(sample_points(3, 4, 11), sample_points(3, 4, 12));
        let bound = BigInt::from(COORD_BOUND);
        assert!(sample_points(2, 50, 1).iter().flatten().all(|c| c.magnitude() <= bound.magnitude()));
    }
}
