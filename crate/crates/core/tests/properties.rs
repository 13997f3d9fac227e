mod common;

use std::collections::BTreeMap;

use common::{leibniz, oracle_determinant};
use detrep::chains::{chain_form, improved_chain_form};
use detrep::linalg::{gcd_row_reduce, linear_form_matrix, solve_unit_determinant, IntMatrix};
use detrep::pencil::{
    bareiss_symbolic_determinant, pencil_from_json, pencil_to_json, symbolic_determinant, AffineEntry, Form,
    PencilMatrix,
};
use detrep::poly::{
    default_names, from_json, parse_polynomial, to_json, to_text, CoeffPolynomial, LinearBinding, Monomial,
    ParsedPolynomial, Polynomial,
};
use detrep::represent::{ndr, rdr, tdr, tdr_with_transforms, udr, SplitPencil};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn polynomial(max_vars: usize, max_deg: u32, max_terms: usize, coeff: i64) -> impl Strategy<Value = Polynomial> {
    (1..=max_vars).prop_flat_map(move |k| {
        prop::collection::vec((prop::collection::vec(0..=max_deg, k), -coeff..=coeff), 0..=max_terms).prop_map(
            move |terms| {
                Polynomial::from_terms(
                    k,
                    terms.into_iter().filter(|(e, _)| e.iter().sum::<u32>() <= max_deg).map(|(e, c)| {
                        (Monomial::from_exponents(&e), BigInt::from(c))
                    }),
                )
            },
        )
    })
}

fn point(k: usize) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec((-50i64..=50).prop_map(BigInt::from), k)
}

fn int_vec(len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Vec<BigInt>> {
    prop::collection::vec((-40i64..=40).prop_map(BigInt::from), len)
        .prop_filter("not all zero", |v| v.iter().any(|x| !x.is_zero()))
}

fn affine_pencil(n: usize, k: usize) -> impl Strategy<Value = PencilMatrix> {
    prop::collection::vec(prop::collection::vec((-5i64..=5, prop::option::of((0..k, -3i64..=3))), n), n).prop_map(
        move |rows| {
            let cells = rows
                .into_iter()
                .map(|r| {
                    r.into_iter()
                        .map(|(c, lin)| AffineEntry::new(c, lin.map(|(v, b)| (v, BigInt::from(b)))))
                        .collect()
                })
                .collect();
            PencilMatrix::new(Form::Raw, k, cells).unwrap()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_roundtrip(p in polynomial(4, 5, 8, 1_000)) {
        let names = default_names(p.nvars());
        let back = parse_polynomial(&to_text(&p, &names), Some(&names)).unwrap();
        prop_assert_eq!(back.poly, p);
    }

    #[test]
    fn json_roundtrip(p in polynomial(4, 5, 8, 1_000)) {
        let names = default_names(p.nvars());
        let ParsedPolynomial { poly, vars } = from_json(&to_json(&p, &names)).unwrap();
        prop_assert_eq!(poly, p);
        prop_assert_eq!(vars, names);
    }

    #[test]
    fn evaluation_is_a_homomorphism(
        (p, q, pt) in (1usize..=3).prop_flat_map(|k| (polynomial(k, 3, 6, 30).prop_map(move |p| p.with_nvars(k)),
                                                     polynomial(k, 3, 6, 30).prop_map(move |p| p.with_nvars(k)),
                                                     point(k)))
    ) {
        let k = pt.len();
        let (p, q) = (p.with_nvars(k), q.with_nvars(k));
        let (pv, qv) = (p.evaluate(&pt).unwrap(), q.evaluate(&pt).unwrap());
        prop_assert_eq!((&p + &q).evaluate(&pt).unwrap(), &pv + &qv);
        prop_assert_eq!((&p * &q).evaluate(&pt).unwrap(), &pv * &qv);
        prop_assert_eq!((&p - &q).evaluate(&pt).unwrap(), &pv - &qv);
    }

    #[test]
    fn substitution_commutes_with_evaluation(
        p in polynomial(4, 3, 6, 30),
        raw in prop::collection::vec((0usize..4, -5i64..=5, prop::option::of(0usize..4)), 0..4),
        pt in point(4),
    ) {
        let k = p.nvars();
        let bindings: BTreeMap<usize, LinearBinding> = raw
            .into_iter()
            .filter(|(v, _, t)| *v < k && t.is_none_or(|t| t < k))
            .map(|(v, s, t)| (v, LinearBinding { scalar: s.into(), var: t }))
            .collect();
        let pt = &pt[..k];
        let moved: Vec<BigInt> = (0..k)
            .map(|i| match bindings.get(&i) {
                Some(b) => match b.var {
                    Some(t) => &b.scalar * &pt[t],
                    None => b.scalar.clone(),
                },
                None => pt[i].clone(),
            })
            .collect();
        let q = p.substitute_linear(&bindings).unwrap();
        prop_assert_eq!(q.evaluate(pt).unwrap(), p.evaluate(&moved).unwrap());
    }

    #[test]
    fn gcd_reduction(a in int_vec(1..=6)) {
        let (g, w) = gcd_row_reduce(&a).unwrap();
        let expect = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        prop_assert_eq!(&g, &expect);
        let image = w.forward.left_mul_vec(&a);
        prop_assert!(image[..a.len() - 1].iter().all(Zero::is_zero));
        prop_assert_eq!(&image[a.len() - 1], &g);
        prop_assert_eq!(w.forward.determinant().unwrap(), BigInt::from(w.parity));
    }

    #[test]
    fn linear_form_determinant(a in int_vec(2..=5)) {
        let n = a.len();
        let lf = linear_form_matrix(&a).unwrap();
        let mut rows: Vec<Vec<Polynomial>> = lf
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|c| Polynomial::constant(c, n)).collect())
            .collect();
        rows.push((0..n).map(|v| Polynomial::var(v, n)).collect());
        let want = Polynomial::from_terms(n, a.iter().enumerate().map(|(v, c)| (Monomial::var(v), c.clone())));
        prop_assert_eq!(leibniz(&rows, n), want);
    }

    #[test]
    fn unit_determinant_completion(a in int_vec(2..=5)) {
        let g = a.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        let a: Vec<BigInt> = a.iter().map(|x| x / &g).collect();
        let b = solve_unit_determinant(&a).unwrap();
        prop_assert_eq!(b.stack_row(&a).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn elimination_matches_expansion(m in (1usize..=5).prop_flat_map(|n| affine_pencil(n, 3))) {
        let oracle = oracle_determinant(&m);
        prop_assert_eq!(&bareiss_symbolic_determinant(&m), &oracle);
        prop_assert_eq!(&symbolic_determinant(&m), &oracle);
    }

    #[test]
    fn pencil_json_roundtrip(m in (1usize..=4).prop_flat_map(|n| affine_pencil(n, 3))) {
        let names = default_names(3);
        let (back, vars) = pencil_from_json(&pencil_to_json(&m, &names)).unwrap();
        prop_assert_eq!(back.entries(), m.entries());
        prop_assert_eq!(vars, names);
    }

    #[test]
    fn pipeline_preserves_determinant(p in polynomial(3, 3, 5, 20).prop_filter("non-zero", |p| !p.is_zero())) {
        for cf in [chain_form(&p).unwrap(), improved_chain_form(&p).unwrap()] {
            let n = ndr(&cf).unwrap();
            let t = tdr(&n).unwrap();
            let r = rdr(&t).unwrap();
            prop_assert!(t.is_tdr());
            for m in [&n, &t, &r] {
                if m.n() <= 8 {
                    prop_assert_eq!(&symbolic_determinant(m), &p);
                } else {
                    prop_assert!(detrep::pencil::eval_determinant_check(m, &p, 8, 1));
                }
            }
        }
    }

    #[test]
    fn triangular_transforms_are_exact(p in polynomial(2, 3, 5, 20).prop_filter("non-zero", |p| !p.is_zero())) {
        let n = ndr(&improved_chain_form(&p).unwrap()).unwrap();
        let t = tdr_with_transforms(&n).unwrap();
        let before = SplitPencil::from_pencil(&n).unwrap();
        let after = SplitPencil::from_pencil(&t.pencil).unwrap();
        prop_assert_eq!(&(&t.left * &before.a) * &t.right, after.a);
        prop_assert_eq!(&(&t.left * &before.b) * &t.right, after.b);
        let unit = |m: &IntMatrix| m.determinant().unwrap().abs().is_one();
        prop_assert!(unit(&t.left) && unit(&t.right));
    }

    #[test]
    fn uniform_of_integer_polynomial(p in polynomial(3, 3, 5, 9)) {
        let names = default_names(p.nvars());
        let parsed = ParsedPolynomial { poly: p.clone(), vars: names };
        let m = udr(&CoeffPolynomial::from_integer(&parsed)).unwrap();
        prop_assert!(m.is_affine());
        prop_assert_eq!(m.determinant(), p);
    }
}
