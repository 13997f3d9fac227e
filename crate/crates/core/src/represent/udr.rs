use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{lift_coefficients, ndr, rdr, tdr, zero_pencil, CarrierRule, LiftingRecord};
use crate::chains::{improved_chain_form_with, ChainOptions};
use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::pencil::{
    cofactor_determinant, format_bmatrix, format_grid, poly_matrix_determinant, AffineEntry, Form, PencilMatrix,
    PointEvaluate,
};
use crate::poly::{parse_coeff_polynomial, CoeffPolynomial, Monomial, Polynomial};

#[derive(Clone, Copy, Debug, Default)]
pub struct UdrOptions {
    pub carrier: CarrierRule,
}

/// Affine pencil `A_0 + sum x_i A_i` whose matrices may depend linearly on
/// named parameters. Entries live in `Z[x_0..x_{k-1}, c_0..c_{m-1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UdrMatrix {
    vars: Vec<String>,
    params: Vec<String>,
    entries: Vec<Vec<Polynomial>>,
}

#[derive(Clone, Debug)]
pub struct UdrOutcome {
    pub lifted: Polynomial,
    pub record: LiftingRecord,
    pub chain_len: usize,
    pub tdr_dim: usize,
    /// Reduced representation of the lifted polynomial.
    pub rdr: PencilMatrix,
    pub matrix: UdrMatrix,
}

pub fn udr(p: &CoeffPolynomial) -> Result<UdrMatrix> {
    udr_with(p, UdrOptions::default()).map(|o| o.matrix)
}

/// Lifts the coefficients, builds the reduced representation of the lifted
/// polynomial and substitutes the coefficients back.
pub fn udr_with(p: &CoeffPolynomial, opts: UdrOptions) -> Result<UdrOutcome> {
    let (lifted, record) = lift_coefficients(p, opts.carrier)?;
    let k = p.nvars();
    let combined = k + p.params().len();
    if lifted.is_zero() {
        return Ok(UdrOutcome {
            lifted,
            record,
            chain_len: 1,
            tdr_dim: 1,
            rdr: zero_pencil(k, Form::Rdr),
            matrix: UdrMatrix {
                vars: p.vars().to_vec(),
                params: p.params().to_vec(),
                entries: vec![vec![Polynomial::zero(combined)]],
            },
        });
    }
    let copts = ChainOptions {
        divide_first: (k..record.lifted_nvars()).collect::<BTreeSet<_>>(),
    };
    let cf = improved_chain_form_with(&lifted, &copts)?;
    let t = tdr(&ndr(&cf)?)?;
    let tdr_dim = t.n();
    let r = rdr(&t)?.with_nvars(record.lifted_nvars());
    let images = record.images();
    let entries = r
        .entries()
        .iter()
        .map(|row| {
            row.iter()
                .map(|e| e.to_polynomial(record.lifted_nvars()).substitute(&images, combined))
                .collect()
        })
        .collect();
    Ok(UdrOutcome {
        lifted,
        record,
        chain_len: cf.len(),
        tdr_dim,
        rdr: r,
        matrix: UdrMatrix {
            vars: p.vars().to_vec(),
            params: p.params().to_vec(),
            entries,
        },
    })
}

fn x_part(m: &Monomial, k: usize) -> (Option<usize>, Monomial) {
    let x = m.powers().iter().find(|&&(v, _)| v < k).map(|&(v, _)| v);
    let rest = Monomial::from_powers(m.powers().iter().copied().filter(|&(v, _)| v >= k));
    (x, rest)
}

#[derive(Serialize, Deserialize)]
struct UdrDoc {
    form: Form,
    n: usize,
    vars: Vec<String>,
    params: Vec<String>,
    entries: Vec<Vec<UdrEntryDoc>>,
}

#[derive(Serialize, Deserialize)]
struct UdrEntryDoc {
    c: String,
    #[serde(default)]
    lin: BTreeMap<usize, String>,
}

impl UdrMatrix {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn combined_nvars(&self) -> usize {
        self.vars.len() + self.params.len()
    }

    pub fn combined_names(&self) -> Vec<String> {
        self.vars.iter().chain(self.params.iter()).cloned().collect()
    }

    /// No entry multiplies two of the variables together.
    pub fn is_affine(&self) -> bool {
        let k = self.vars.len();
        self.entries.iter().flatten().all(|e| {
            e.iter()
                .all(|(m, _)| m.powers().iter().filter(|&&(v, _)| v < k).map(|&(_, e)| e).sum::<u32>() <= 1)
        })
    }

    /// Determinant in `Z[x, c]`.
    pub fn determinant(&self) -> Polynomial {
        let n = self.combined_nvars();
        if self.n() <= 4 {
            cofactor_determinant(&self.entries, n)
        } else {
            poly_matrix_determinant(self.entries.clone(), n)
        }
    }

    /// The integer pencil when no parameters occur.
    pub fn to_pencil(&self) -> Option<PencilMatrix> {
        if !self.params.is_empty() {
            return None;
        }
        let rows = self
            .entries
            .iter()
            .map(|row| row.iter().map(AffineEntry::from_polynomial).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        PencilMatrix::new(Form::Udr, self.vars.len(), rows).ok().map(|m| m.retag(Form::Udr))
    }

    /// Coefficients of an entry grouped by variable: the constant part
    /// under `None`.
    fn grouped(&self, e: &Polynomial) -> BTreeMap<Option<usize>, Polynomial> {
        let k = self.vars.len();
        let n = self.combined_nvars();
        let mut out: BTreeMap<Option<usize>, Polynomial> = BTreeMap::new();
        for (m, c) in e.iter() {
            let (x, rest) = x_part(m, k);
            let slot = out.entry(x).or_insert_with(|| Polynomial::zero(n));
            *slot = &*slot + &Polynomial::monomial(rest, c.clone(), n);
        }
        out
    }

    fn cell_text(&self, e: &Polynomial, latex: bool) -> String {
        let k = self.vars.len();
        let param_name = |j: usize| {
            if latex {
                latex_name(&self.params[j])
            } else {
                format!("[{}]", self.params[j])
            }
        };
        let var_name = |v: usize| if latex { latex_name(&self.vars[v]) } else { self.vars[v].clone() };
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut groups: Vec<(Option<usize>, Polynomial)> = self.grouped(e).into_iter().collect();
        // variables first, the constant part last
        let constant_first = groups.first().is_some_and(|g| g.0.is_none());
        groups.rotate_left(usize::from(constant_first));
        for (x, coeffs) in groups {
            for (pm, c) in coeffs.terms_desc() {
                let mut factors: Vec<String> = pm.powers().iter().map(|&(v, _)| param_name(v - k)).collect();
                if let Some(v) = x {
                    factors.push(var_name(v));
                }
                let sep = if latex { " " } else { "*" };
                let a = c.abs();
                let body = if factors.is_empty() {
                    a.to_string()
                } else if a.is_one() {
                    factors.join(sep)
                } else {
                    format!("{a}{sep}{}", factors.join(sep))
                };
                pieces.push((c.is_negative(), body));
            }
        }
        if pieces.is_empty() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, (neg, body)) in pieces.into_iter().enumerate() {
            match (i, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&body);
        }
        s
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|r| r.iter().map(|e| self.cell_text(e, false)).collect()).collect();
        format_grid(&cells)
    }

    pub fn to_latex(&self) -> String {
        let cells: Vec<Vec<String>> =
            self.entries.iter().map(|r| r.iter().map(|e| self.cell_text(e, true)).collect()).collect();
        format_bmatrix(&cells)
    }

    /// Pencil document with coefficient strings written over the bracketed
    /// parameter names, plus a `params` list.
    pub fn to_json(&self) -> String {
        let k = self.vars.len();
        let names: Vec<String> = self.params.iter().map(|p| format!("[{p}]")).collect();
        let text = |p: &Polynomial| crate::poly::to_text(&p.remap(self.params.len(), |v| v - k), &names);
        let doc = UdrDoc {
            form: Form::Udr,
            n: self.n(),
            vars: self.vars.clone(),
            params: self.params.clone(),
            entries: self
                .entries
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|e| {
                            let mut g = self.grouped(e);
                            let c = g.remove(&None).map(|p| text(&p)).unwrap_or_else(|| "0".into());
                            let lin = g.into_iter().map(|(x, p)| (x.expect("constant removed"), text(&p))).collect();
                            UdrEntryDoc { c, lin }
                        })
                        .collect()
                })
                .collect(),
        };
        serde_json::to_string(&doc).expect("plain data serializes")
    }

    pub fn from_json(text: &str) -> Result<UdrMatrix> {
        let doc: UdrDoc = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.entries.len() != doc.n || doc.entries.iter().any(|r| r.len() != doc.n) {
            return Err(Error::Document("entries are not n x n".into()));
        }
        let k = doc.vars.len();
        let n = k + doc.params.len();
        let read = |s: &str| -> Result<Polynomial> {
            let p = parse_coeff_polynomial(s, Some(&[]))?;
            // names are all bracketed, so every term is a constant times a parameter
            let mut out = Polynomial::zero(n);
            for (c, m) in p.terms() {
                debug_assert!(m.is_one());
                let term = match c {
                    crate::poly::Coefficient::Integer(v) => Polynomial::constant(v.clone(), n),
                    crate::poly::Coefficient::Named { param, multiplier } => {
                        let name = &p.params()[*param];
                        let j = doc
                            .params
                            .iter()
                            .position(|q| q == name)
                            .ok_or_else(|| Error::UnknownVariable(name.clone()))?;
                        Polynomial::var(k + j, n).scale(multiplier)
                    }
                };
                out = &out + &term;
            }
            Ok(out)
        };
        let mut entries = Vec::with_capacity(doc.n);
        for row in &doc.entries {
            let mut out = Vec::with_capacity(doc.n);
            for e in row {
                let mut cell = read(&e.c)?;
                for (&v, s) in &e.lin {
                    if v >= k {
                        return Err(Error::BindingOutOfRange { var: v, nvars: k });
                    }
                    cell = &cell + &(&read(s)? * &Polynomial::var(v, n));
                }
                out.push(cell);
            }
            entries.push(out);
        }
        Ok(UdrMatrix {
            vars: doc.vars,
            params: doc.params,
            entries,
        })
    }
}

fn latex_name(n: &str) -> String {
    let split = n.trim_end_matches(|c: char| c.is_ascii_digit()).len();
    if split == 0 || split == n.len() {
        n.to_string()
    } else {
        format!("{}_{{{}}}", &n[..split], &n[split..])
    }
}

impl PointEvaluate for UdrMatrix {
    fn point_nvars(&self) -> usize {
        self.combined_nvars()
    }

    fn evaluate_at(&self, point: &[BigInt]) -> IntMatrix {
        let n = self.n();
        let data = self.entries.iter().flatten().map(|e| e.eval_unchecked(point)).collect();
        IntMatrix::new(n, n, data)
    }
}
