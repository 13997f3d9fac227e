//! Chains of monomials and (improved) chain-forms of a polynomial.
//!
//! A chain-form lists every monomial the determinantal construction needs,
//! each degree >= 2 entry pointing at a later entry it reduces to by
//! dividing out one variable.

use std::collections::{BTreeSet, HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial};

/// Monomials descending one variable at a time down to degree one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chain {
    monomials: Vec<Monomial>,
}

impl Chain {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        match self.monomials.as_slice() {
            [] => false,
            [only] if only.is_one() => true,
            ms => {
                ms.windows(2).all(|w| w[1].degree() + 1 == w[0].degree() && w[1].divides(&w[0]))
                    && ms.last().map(Monomial::degree) == Some(1)
            }
        }
    }
}

/// Chain of `m`, dividing by the lowest-index variable at each step. With
/// `end_var` the chain keeps that variable until last.
pub fn chain_of_monomial(m: &Monomial, end_var: Option<usize>) -> Result<Chain> {
    if let Some(v) = end_var {
        if m.exponent(v) == 0 {
            return Err(Error::EndVarMissing { var: v });
        }
    }
    let mut monomials = vec![m.clone()];
    let mut cur = m.clone();
    while cur.degree() > 1 {
        let v = cur
            .support()
            .find(|&v| Some(v) != end_var)
            .or(end_var)
            .expect("degree > 1 has support");
        cur = cur.div_var(v).expect("v in support");
        monomials.push(cur.clone());
    }
    Ok(Chain { monomials })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Successor {
    /// Position of the successor entry, always later than the owner.
    pub index: usize,
    /// Variable with `m_owner = x_var * m_successor`.
    pub var: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainEntry {
    pub coeff: BigInt,
    pub monomial: Monomial,
    pub successor: Option<Successor>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainMode {
    Plain,
    Improved,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainForm {
    nvars: usize,
    mode: ChainMode,
    entries: Vec<ChainEntry>,
}

/// Tuning for [`improved_chain_form_with`].
#[derive(Clone, Debug, Default)]
pub struct ChainOptions {
    /// Variables to divide out before any other when no merge is available.
    /// Coefficient lifting puts its fresh variables here so that chains
    /// bottom out in the original variables.
    pub divide_first: BTreeSet<usize>,
}

impl ChainForm {
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn mode(&self) -> ChainMode {
        self.mode
    }

    pub fn entries(&self) -> &[ChainEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn coefficients(&self) -> Vec<BigInt> {
        self.entries.iter().map(|e| e.coeff.clone()).collect()
    }

    pub fn constant_positions(&self) -> Vec<usize> {
        (0..self.entries.len()).filter(|&i| self.entries[i].monomial.is_one()).collect()
    }

    /// `sum coeff * monomial` over all entries.
    pub fn reconstruct(&self) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            self.entries.iter().map(|e| (e.monomial.clone(), e.coeff.clone())),
        )
    }

    /// Reconstruction, successor and (for improved forms) uniqueness checks.
    pub fn validate(&self, source: &Polynomial) -> Result<()> {
        let bad = |msg: String| Err(Error::Document(msg));
        if self.reconstruct() != source.clone().with_nvars(self.nvars) {
            return bad("chain-form does not sum to the polynomial".into());
        }
        for (i, e) in self.entries.iter().enumerate() {
            match (e.monomial.degree() >= 2, e.successor) {
                (true, None) => return bad(format!("entry {i} has no successor")),
                (false, Some(_)) => return bad(format!("entry {i} of degree <= 1 has a successor")),
                (true, Some(s)) => {
                    if s.index <= i || s.index >= self.entries.len() {
                        return bad(format!("entry {i} points at {}", s.index));
                    }
                    if self.entries[s.index].monomial.mul(&Monomial::var(s.var)) != e.monomial {
                        return bad(format!("entry {i} is not x{} times entry {}", s.var, s.index));
                    }
                }
                (false, None) => {}
            }
        }
        if self.mode == ChainMode::Improved {
            let distinct: HashSet<&Monomial> = self.entries.iter().map(|e| &e.monomial).collect();
            if distinct.len() != self.entries.len() {
                return bad("improved chain-form repeats a monomial".into());
            }
        }
        Ok(())
    }
}

/// Terms grouped by descending degree, graded-lex descending inside a group.
fn heads(p: &Polynomial) -> Vec<Monomial> {
    p.terms_desc().map(|(m, _)| m.clone()).collect()
}

fn divided_var(from: &Monomial, to: &Monomial) -> usize {
    from.div(to)
        .and_then(|q| q.as_var())
        .expect("consecutive chain monomials differ by one variable")
}

/// Chain-form built from one independent chain per uncovered term.
/// Monomials may repeat across chains; each term's coefficient lands on
/// its first occurrence.
pub fn chain_form(p: &Polynomial) -> Result<ChainForm> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut covered: HashSet<Monomial> = HashSet::new();
    let mut chains: Vec<Chain> = Vec::new();
    for m in heads(p) {
        if covered.contains(&m) {
            continue;
        }
        let chain = chain_of_monomial(&m, None)?;
        covered.extend(chain.monomials.iter().cloned());
        chains.push(chain);
    }

    let mut assigned: HashSet<Monomial> = HashSet::new();
    let mut entries = Vec::new();
    for chain in &chains {
        let base = entries.len();
        for (k, m) in chain.monomials.iter().enumerate() {
            let coeff = if assigned.insert(m.clone()) {
                p.coeff(m)
            } else {
                BigInt::zero()
            };
            let successor = chain.monomials.get(k + 1).filter(|_| m.degree() >= 2).map(|next| Successor {
                index: base + k + 1,
                var: divided_var(next, m),
            });
            entries.push(ChainEntry {
                coeff,
                monomial: m.clone(),
                successor,
            });
        }
    }
    Ok(ChainForm {
        nvars: p.nvars(),
        mode: ChainMode::Plain,
        entries,
    })
}

pub fn improved_chain_form(p: &Polynomial) -> Result<ChainForm> {
    improved_chain_form_with(p, &ChainOptions::default())
}

/// Chain-form where a chain that reaches a monomial already placed stops
/// there and is spliced into the chain holding it.
///
/// At each descent step the candidates `cur / x_v` are ranked:
/// 1. already placed in an earlier chain (merge and stop),
/// 2. an uncovered term of `p` (absorbs a future chain head),
/// 3. anything else;
///
/// ties go to `divide_first` variables, then to the candidate dividing the
/// most terms of `p`, then to the lowest variable index.
pub fn improved_chain_form_with(p: &Polynomial, opts: &ChainOptions) -> Result<ChainForm> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let terms = heads(p);
    let term_set: HashSet<&Monomial> = terms.iter().collect();
    // monomial -> chain index
    let mut placed: HashMap<Monomial, usize> = HashMap::new();
    let mut chains: Vec<Vec<Monomial>> = Vec::new();
    let mut succ: HashMap<Monomial, usize> = HashMap::new();

    for head in &terms {
        if placed.contains_key(head) {
            continue;
        }
        let mut fresh = vec![head.clone()];
        let mut cur = head.clone();
        let mut merged_into = None;
        while cur.degree() > 1 {
            let (v, cand, merge) = cur
                .support()
                .map(|v| {
                    let cand = cur.div_var(v).expect("v in support");
                    let rank = if placed.contains_key(&cand) {
                        0
                    } else if term_set.contains(&cand) {
                        1
                    } else {
                        2
                    };
                    let score = terms.iter().filter(|t| cand.divides(t)).count();
                    (rank, !opts.divide_first.contains(&v), std::cmp::Reverse(score), v, cand)
                })
                .min_by(|a, b| (a.0, a.1, a.2, a.3).cmp(&(b.0, b.1, b.2, b.3)))
                .map(|(rank, _, _, v, cand)| (v, cand, rank == 0))
                .expect("degree > 1 has support");
            succ.insert(cur.clone(), v);
            if merge {
                merged_into = Some((placed[&cand], cand));
                break;
            }
            fresh.push(cand.clone());
            cur = cand;
        }
        match merged_into {
            Some((ci, at)) => {
                let chain = &mut chains[ci];
                let k = chain.iter().position(|m| *m == at).expect("placed monomial is in its chain");
                for m in &fresh {
                    placed.insert(m.clone(), ci);
                }
                chain.splice(k..k, fresh);
            }
            None => {
                let ci = chains.len();
                for m in &fresh {
                    placed.insert(m.clone(), ci);
                }
                chains.push(fresh);
            }
        }
    }

    let flat: Vec<Monomial> = chains.into_iter().flatten().collect();
    let position: HashMap<&Monomial, usize> = flat.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let entries = flat
        .iter()
        .map(|m| ChainEntry {
            coeff: p.coeff(m),
            monomial: m.clone(),
            successor: succ.get(m).map(|&v| Successor {
                index: position[&m.div_var(v).expect("successor divides")],
                var: v,
            }),
        })
        .collect();
    Ok(ChainForm {
        nvars: p.nvars(),
        mode: ChainMode::Improved,
        entries,
    })
}

#[derive(Serialize)]
struct ChainFormDoc<'a> {
    mode: ChainMode,
    vars: &'a [String],
    entries: Vec<ChainEntryDoc>,
}

#[derive(Serialize)]
struct ChainEntryDoc {
    coeff: String,
    exps: Vec<u32>,
    successor: Option<Successor>,
}

/// JSON dump: ordered entries with coefficient strings, dense exponent
/// vectors and successor links.
pub fn chain_form_json(cf: &ChainForm, vars: &[String]) -> String {
    let n = cf.nvars.max(vars.len());
    let doc = ChainFormDoc {
        mode: cf.mode,
        vars,
        entries: cf
            .entries
            .iter()
            .map(|e| ChainEntryDoc {
                coeff: e.coeff.to_string(),
                exps: e.monomial.to_exponents(n),
                successor: e.successor,
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_polynomial;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::from_exponents(exps)
    }

    fn poly(s: &str) -> Polynomial {
        parse_polynomial(s, None).unwrap().poly
    }

    #[test]
    fn seven_step_chain() {
        let c = chain_of_monomial(&m(&[2, 3, 2]), None).unwrap();
        let expect: Vec<Monomial> = [
            [2, 3, 2],
            [1, 3, 2],
            [0, 3, 2],
            [0, 2, 2],
            [0, 1, 2],
            [0, 0, 2],
            [0, 0, 1],
        ]
        .iter()
        .map(|e| m(e))
        .collect();
        assert_eq!(c.monomials(), expect.as_slice());
        assert!(c.is_valid());
    }

    #[test]
    fn chain_edge_cases() {
        let single = chain_of_monomial(&m(&[0, 0, 1]), None).unwrap();
        assert_eq!(single.len(), 1);
        let constant = chain_of_monomial(&Monomial::one(), None).unwrap();
        assert_eq!(constant.monomials(), &[Monomial::one()]);
        assert!(constant.is_valid());
        let ends = chain_of_monomial(&m(&[2, 1]), Some(0)).unwrap();
        assert_eq!(ends.monomials().last(), Some(&m(&[1, 0])));
        assert_eq!(
            chain_of_monomial(&m(&[2, 0]), Some(1)).unwrap_err(),
            Error::EndVarMissing { var: 1 }
        );
    }

    #[test]
    fn plain_form_pads_with_zeros() {
        let p = poly("x1^2 + 1");
        let cf = chain_form(&p).unwrap();
        let got: Vec<(i64, Monomial)> = cf
            .entries()
            .iter()
            .map(|e| (i64::try_from(&e.coeff).unwrap(), e.monomial.clone()))
            .collect();
        assert_eq!(got, vec![(1, m(&[2])), (0, m(&[1])), (1, Monomial::one())]);
        assert_eq!(cf.constant_positions(), vec![2]);
        cf.validate(&p).unwrap();
    }

    #[test]
    fn degree_one_only() {
        let p = poly("2*x1");
        let cf = chain_form(&p).unwrap();
        assert_eq!(cf.len(), 1);
        let q = poly("x1 + x2");
        let icf = improved_chain_form(&q).unwrap();
        assert_eq!(icf.len(), 2);
        assert!(icf.entries().iter().all(|e| e.monomial.degree() == 1));
    }

    #[test]
    fn square_of_sum_forms() {
        let p = poly("x1^2 + 2*x1*x2 + x2^2");
        let plain = chain_form(&p).unwrap();
        let order: Vec<Monomial> = plain.entries().iter().map(|e| e.monomial.clone()).collect();
        assert_eq!(order, vec![m(&[2, 0]), m(&[1, 0]), m(&[1, 1]), m(&[0, 1]), m(&[0, 2]), m(&[0, 1])]);
        plain.validate(&p).unwrap();

        let improved = improved_chain_form(&p).unwrap();
        let order: Vec<Monomial> = improved.entries().iter().map(|e| e.monomial.clone()).collect();
        assert_eq!(order, vec![m(&[2, 0]), m(&[1, 1]), m(&[1, 0]), m(&[0, 2]), m(&[0, 1])]);
        // x1*x2 reaches x1 two columns to the right
        assert_eq!(improved.entries()[1].successor, Some(Successor { index: 2, var: 1 }));
        improved.validate(&p).unwrap();
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(chain_form(&Polynomial::zero(2)).unwrap_err(), Error::ZeroPolynomial);
        assert_eq!(improved_chain_form(&Polynomial::zero(2)).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn divide_first_steers_chain_ends() {
        // y*x1 (y = index 1): dividing out y ends the chain at x1
        let p = Polynomial::monomial(m(&[1, 1]), 1, 2);
        let mut opts = ChainOptions::default();
        opts.divide_first.insert(1);
        let cf = improved_chain_form_with(&p, &opts).unwrap();
        assert_eq!(cf.entries()[1].monomial, m(&[1, 0]));
        let cf = improved_chain_form(&p).unwrap();
        assert_eq!(cf.entries()[1].monomial, m(&[0, 1]));
    }
}
