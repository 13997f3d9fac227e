use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{CoeffPolynomial, Coefficient, LinearBinding, Monomial, Polynomial};

/// Which variable of a term absorbs its coefficient.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum CarrierRule {
    /// The lowest-index variable of the monomial.
    #[default]
    LowestIndex,
    /// A variable whose cofactor is already the cofactor of another lifted
    /// term, so that more chains can merge; lowest index otherwise.
    SharedRest,
}

/// `y = scalar * x_carrier`, or `y = scalar` for the constant term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Binding {
    pub var: usize,
    pub scalar: Coefficient,
    pub carrier: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftingRecord {
    pub original_nvars: usize,
    pub params: usize,
    /// Ordered by `var`, which runs contiguously from `original_nvars`.
    pub bindings: Vec<Binding>,
}

impl LiftingRecord {
    pub fn lifted_nvars(&self) -> usize {
        self.original_nvars + self.bindings.len()
    }

    pub fn is_lifted(&self, var: usize) -> bool {
        var >= self.original_nvars && var < self.lifted_nvars()
    }

    /// Images of the lifted ring's variables in `Z[x, c]`, the parameters
    /// placed after the original variables.
    pub fn images(&self) -> Vec<Polynomial> {
        let k = self.original_nvars;
        let n = k + self.params;
        let mut out: Vec<Polynomial> = (0..k).map(|i| Polynomial::var(i, n)).collect();
        for b in &self.bindings {
            let scalar = match &b.scalar {
                Coefficient::Integer(v) => Polynomial::constant(v.clone(), n),
                Coefficient::Named { param, multiplier } => Polynomial::var(k + param, n).scale(multiplier),
            };
            out.push(match b.carrier {
                Some(c) => &scalar * &Polynomial::var(c, n),
                None => scalar,
            });
        }
        out
    }

    /// Back-substitution map when every bound coefficient is an integer.
    pub fn integer_bindings(&self) -> Option<BTreeMap<usize, LinearBinding>> {
        self.bindings
            .iter()
            .map(|b| match &b.scalar {
                Coefficient::Integer(v) => Some((
                    b.var,
                    LinearBinding {
                        scalar: v.clone(),
                        var: b.carrier,
                    },
                )),
                Coefficient::Named { .. } => None,
            })
            .collect()
    }
}

fn carrier_for(m: &Monomial, rule: CarrierRule, rests: &HashSet<Monomial>) -> Option<usize> {
    let lowest = m.support().next();
    match rule {
        CarrierRule::LowestIndex => lowest,
        CarrierRule::SharedRest => m
            .support()
            .find(|&v| rests.contains(&m.div_var(v).expect("v in support")))
            .or(lowest),
    }
}

/// Replaces every coefficient other than the integer 1 by a fresh variable
/// riding on one variable of its term (or standing alone for the constant
/// term). Terms sharing a coefficient and a carrier share the variable.
pub fn lift_coefficients(p: &CoeffPolynomial, rule: CarrierRule) -> Result<(Polynomial, LiftingRecord)> {
    let k = p.nvars();
    let terms = p.terms();

    // carriers are chosen from the highest degree down so shared cofactors
    // exist by the time lower terms look for them
    let mut order: Vec<usize> = (0..terms.len()).collect();
    order.sort_by(|&a, &b| terms[b].1.cmp(&terms[a].1).then(a.cmp(&b)));
    let mut rests: HashSet<Monomial> = HashSet::new();
    let mut carriers: Vec<Option<usize>> = vec![None; terms.len()];
    for &i in &order {
        let (c, m) = &terms[i];
        if CoeffPolynomial::is_unit_term(c) {
            rests.insert(m.clone());
            continue;
        }
        let carrier = carrier_for(m, rule, &rests);
        if let Some(v) = carrier {
            rests.insert(m.div_var(v).expect("carrier divides"));
        }
        carriers[i] = carrier;
    }

    let mut bindings: Vec<Binding> = Vec::new();
    let mut lifted: Vec<(Monomial, BigInt)> = Vec::new();
    for (i, (c, m)) in terms.iter().enumerate() {
        if CoeffPolynomial::is_unit_term(c) {
            lifted.push((m.clone(), BigInt::one()));
            continue;
        }
        let carrier = carriers[i];
        if let Some(v) = carrier {
            if v >= k {
                return Err(Error::Lift(format!("carrier x{} outside the {k} variables", v + 1)));
            }
        }
        let var = match bindings.iter().find(|b| b.scalar == *c && b.carrier == carrier) {
            Some(b) => b.var,
            None => {
                let var = k + bindings.len();
                bindings.push(Binding {
                    var,
                    scalar: c.clone(),
                    carrier,
                });
                var
            }
        };
        let rest = match carrier {
            Some(v) => m.div_var(v).expect("carrier divides"),
            None => Monomial::one(),
        };
        lifted.push((rest.mul(&Monomial::var(var)), BigInt::one()));
    }
    let n = k + bindings.len();
    let record = LiftingRecord {
        original_nvars: k,
        params: p.params().len(),
        bindings,
    };
    Ok((Polynomial::from_terms(n, lifted), record))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_coeff_polynomial;

    #[test]
    fn single_term() {
        let p = parse_coeff_polynomial("[c]*x1", None).unwrap();
        let (q, rec) = lift_coefficients(&p, CarrierRule::LowestIndex).unwrap();
        assert_eq!(q, Polynomial::var(1, 2));
        assert_eq!(rec.bindings.len(), 1);
        assert_eq!(rec.bindings[0].carrier, Some(0));
        assert_eq!(q.substitute(&rec.images(), 2), p.to_polynomial());
    }

    #[test]
    fn trivariate_quadric() {
        let src = "[c200]*x1^2 + [c110]*x1*x2 + [c101]*x1*x3 + [c020]*x2^2 + [c011]*x2*x3 \
                   + [c002]*x3^2 + [c100]*x1 + [c010]*x2 + [c001]*x3 + [c000]";
        let p = parse_coeff_polynomial(src, None).unwrap();
        let (q, rec) = lift_coefficients(&p, CarrierRule::LowestIndex).unwrap();
        assert_eq!(rec.lifted_nvars(), 13);
        let terms: Vec<Vec<u32>> = q.terms_desc().map(|(m, _)| m.to_exponents(13)).collect();
        let mut expected = vec![
            (0, 3), (1, 4), (2, 5), (1, 6), (2, 7), (2, 8)
        ]
        .into_iter()
        .map(|(x, y)| {
            let mut e = vec![0; 13];
            e[x] = 1;
            e[y] = 1;
            e
        })
        .collect::<Vec<_>>();
        for y in 9..13 {
            let mut e = vec![0; 13];
            e[y] = 1;
            expected.push(e);
        }
        let mut got = terms.clone();
        got.sort();
        expected.sort();
        assert_eq!(got, expected);
        assert!(q.iter().all(|(_, c)| c.is_one()));
        assert_eq!(q.substitute(&rec.images(), 13), p.to_polynomial());
    }

    #[test]
    fn integers_lift_except_one() {
        let p = parse_coeff_polynomial("x1*x2 - 3*x2^2 + 2", None).unwrap();
        let (q, rec) = lift_coefficients(&p, CarrierRule::LowestIndex).unwrap();
        assert_eq!(rec.bindings.len(), 2);
        let back = q.substitute_linear(&rec.integer_bindings().unwrap()).unwrap();
        assert_eq!(back, p.to_polynomial());
    }

    #[test]
    fn shared_coefficient_and_carrier_reuse_variable() {
        let p = parse_coeff_polynomial("[a]*x1^2 + [a]*x1*x2 + [a]*x2", None).unwrap();
        let (q, rec) = lift_coefficients(&p, CarrierRule::LowestIndex).unwrap();
        assert_eq!(rec.bindings.len(), 2);
        assert_eq!(q.substitute(&rec.images(), 3), p.to_polynomial());
    }

    #[test]
    fn shared_rest_picks_existing_cofactor() {
        let p = parse_coeff_polynomial("[a]*x1^2 + [b]*x1*x2", None).unwrap();
        let (_, low) = lift_coefficients(&p, CarrierRule::LowestIndex).unwrap();
        let (_, shared) = lift_coefficients(&p, CarrierRule::SharedRest).unwrap();
        assert_eq!(low.bindings[1].carrier, Some(0));
        assert_eq!(shared.bindings[1].carrier, Some(1));
    }
}
