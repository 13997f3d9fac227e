use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{AffineEntry, Form, PencilMatrix};
use crate::error::{Error, Result};
use crate::poly::{to_latex, to_text};

#[derive(Serialize, Deserialize)]
struct PencilDoc {
    form: Form,
    n: usize,
    vars: Vec<String>,
    entries: Vec<Vec<EntryDoc>>,
}

#[derive(Serialize, Deserialize)]
struct EntryDoc {
    c: String,
    #[serde(default)]
    lin: BTreeMap<usize, String>,
}

fn full_names(names: &[String], n: usize) -> Vec<String> {
    (0..n.max(names.len()))
        .map(|v| names.get(v).cloned().unwrap_or_else(|| format!("x{}", v + 1)))
        .collect()
}

pub fn pencil_to_json(m: &PencilMatrix, names: &[String]) -> String {
    let doc = PencilDoc {
        form: m.form(),
        n: m.n(),
        vars: full_names(names, m.nvars()),
        entries: m
            .entries()
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| EntryDoc {
                        c: e.constant_part().to_string(),
                        lin: e.linear().iter().map(|(&v, c)| (v, c.to_string())).collect(),
                    })
                    .collect()
            })
            .collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

fn parse_int(s: &str) -> Result<BigInt> {
    s.trim().parse().map_err(|_| Error::Document(format!("bad integer `{s}`")))
}

/// Reads a pencil document back, returning the matrix and its variable names.
pub fn pencil_from_json(text: &str) -> Result<(PencilMatrix, Vec<String>)> {
    let doc: PencilDoc = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
    if doc.entries.len() != doc.n {
        return Err(Error::Document(format!("n = {} but {} rows", doc.n, doc.entries.len())));
    }
    let nvars = doc.vars.len();
    let mut rows = Vec::with_capacity(doc.n);
    for row in &doc.entries {
        let mut out = Vec::with_capacity(row.len());
        for e in row {
            let mut lin = Vec::new();
            for (&v, c) in &e.lin {
                if v >= nvars {
                    return Err(Error::BindingOutOfRange { var: v, nvars });
                }
                lin.push((v, parse_int(c)?));
            }
            out.push(AffineEntry::new(parse_int(&e.c)?, lin));
        }
        rows.push(out);
    }
    Ok((PencilMatrix::new(doc.form, nvars, rows)?, doc.vars))
}

pub(crate) fn format_grid(cells: &[Vec<String>]) -> String {
    let ncols = cells.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..ncols)
        .map(|c| cells.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in cells {
        out.push('[');
        for (c, cell) in row.iter().enumerate() {
            out.push_str("  ");
            out.push_str(&" ".repeat(widths[c] - cell.chars().count()));
            out.push_str(cell);
        }
        out.push_str("  ]\n");
    }
    out
}

pub(crate) fn format_bmatrix(cells: &[Vec<String>]) -> String {
    let mut out = String::from("\\begin{bmatrix}\n");
    let body: Vec<String> = cells.iter().map(|row| format!("  {}", row.join(" & "))).collect();
    out.push_str(&body.join(" \\\\\n"));
    out.push_str("\n\\end{bmatrix}\n");
    out
}

/// Right-aligned grid of canonical entry texts.
pub fn pencil_to_text(m: &PencilMatrix, names: &[String]) -> String {
    let names = full_names(names, m.nvars());
    let cells: Vec<Vec<String>> = m
        .entries()
        .iter()
        .map(|row| row.iter().map(|e| to_text(&e.to_polynomial(m.nvars()), &names)).collect())
        .collect();
    format_grid(&cells)
}

pub fn pencil_to_latex(m: &PencilMatrix, names: &[String]) -> String {
    let names = full_names(names, m.nvars());
    let cells: Vec<Vec<String>> = m
        .entries()
        .iter()
        .map(|row| row.iter().map(|e| to_latex(&e.to_polynomial(m.nvars()), &names)).collect())
        .collect();
    format_bmatrix(&cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> PencilMatrix {
        PencilMatrix::new(
            Form::Ndr,
            2,
            vec![
                vec![AffineEntry::new(-1, [(0, BigInt::from(-1))]), AffineEntry::constant(1)],
                vec![AffineEntry::constant(0), AffineEntry::term(1, 3)],
            ],
        )
        .unwrap()
    }

    #[test]
    fn json_shape_and_roundtrip() {
        let m = sample();
        let names = vec!["x1".to_string(), "x2".to_string()];
        let s = pencil_to_json(&m, &names);
        assert_eq!(
            s,
            r#"{"form":"NDR","n":2,"vars":["x1","x2"],"entries":[[{"c":"-1","lin":{"0":"-1"}},{"c":"1","lin":{}}],[{"c":"0","lin":{}},{"c":"0","lin":{"1":"3"}}]]}"#
        );
        let (back, vars) = pencil_from_json(&s).unwrap();
        assert_eq!(back, m);
        assert_eq!(vars, names);
    }

    #[test]
    fn json_rejects_out_of_range_variable() {
        let s = r#"{"form":"RAW","n":1,"vars":["x1"],"entries":[[{"c":"0","lin":{"3":"1"}}]]}"#;
        assert_eq!(pencil_from_json(s).unwrap_err(), Error::BindingOutOfRange { var: 3, nvars: 1 });
    }

    #[test]
    fn text_and_latex() {
        let m = sample();
        let names = vec!["x1".to_string(), "x2".to_string()];
        assert_eq!(pencil_to_text(&m, &names), "[  -x1 - 1     1  ]\n[        0  3*x2  ]\n");
        assert_eq!(
            pencil_to_latex(&m, &names),
            "\\begin{bmatrix}\n  -x_{1} - 1 & 1 \\\\\n  0 & 3x_{2}\n\\end{bmatrix}\n"
        );
    }
}
