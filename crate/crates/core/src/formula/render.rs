use std::fmt::Write;
use std::str::FromStr;

use num_bigint::Sign;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::{FormulaTerm, ImplicitDerivativeFormula};
use crate::error::{Error, Result};
use crate::math::Integer;
use crate::partition::{Part, TwoDimPartition};

pub const FORMULA_SCHEMA: &str = "implicit-deriv/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Latex,
    Text,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

pub fn render(f: &ImplicitDerivativeFormula, format: Format) -> String {
    match format {
        Format::Text => render_text(f),
        Format::Latex => render_latex(f),
        Format::Json => f.to_json(),
    }
}

/// Distinct parts with multiplicity, ordered by total order and then with
/// more x-derivatives first: `Fx, Fy, Fxx, Fxy, Fyy, Fxxx, …`.
fn factors(p: &TwoDimPartition) -> Vec<(Part, u32)> {
    let mut out: Vec<(Part, u32)> = p.multiplicities().into_iter().collect();
    out.sort_by_key(|(part, _)| (part.i() + part.j(), std::cmp::Reverse(part.i())));
    out
}

fn derivative_letters(part: Part) -> String {
    let mut s = "x".repeat(part.i() as usize);
    s.push_str(&"y".repeat(part.j() as usize));
    s
}

fn write_sign(out: &mut String, first: bool, coefficient: &Integer) {
    let negative = coefficient.sign() == Sign::Minus;
    match (first, negative) {
        (true, true) => out.push('-'),
        (true, false) => {}
        (false, true) => out.push_str(" - "),
        (false, false) => out.push_str(" + "),
    }
}

fn render_text(f: &ImplicitDerivativeFormula) -> String {
    let mut out = String::new();
    for (k, term) in f.terms().iter().enumerate() {
        write_sign(&mut out, k == 0, &term.coefficient);
        let magnitude = term.coefficient.abs();
        if !magnitude.is_one() {
            write!(out, "{magnitude}*").unwrap();
        }
        let numerator: Vec<String> = factors(&term.partition)
            .into_iter()
            .map(|(part, e)| {
                let name = format!("F{}", derivative_letters(part));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        out.push_str(&numerator.join("*"));
        match term.fy_exponent {
            1 => out.push_str("/Fy"),
            e => write!(out, "/Fy^{e}").unwrap(),
        }
    }
    out
}

fn render_latex(f: &ImplicitDerivativeFormula) -> String {
    let mut out = String::new();
    for (k, term) in f.terms().iter().enumerate() {
        write_sign(&mut out, k == 0, &term.coefficient);
        let magnitude = term.coefficient.abs();
        if !magnitude.is_one() {
            write!(out, "{magnitude}").unwrap();
        }
        out.push_str("\\frac{");
        for (part, e) in factors(&term.partition) {
            write!(out, "F_{{{}}}", derivative_letters(part)).unwrap();
            if e > 1 {
                write!(out, "^{{{e}}}").unwrap();
            }
        }
        out.push_str("}{F_{y}");
        if term.fy_exponent > 1 {
            write!(out, "^{{{}}}", term.fy_exponent).unwrap();
        }
        out.push('}');
    }
    out
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct FormulaDocument {
    schema: String,
    n: u32,
    term_count: usize,
    terms: Vec<TermDocument>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermDocument {
    coefficient: String,
    partition: TwoDimPartition,
    fy_exponent: u32,
}

impl ImplicitDerivativeFormula {
    pub fn to_json(&self) -> String {
        let doc = FormulaDocument {
            schema: FORMULA_SCHEMA.to_string(),
            n: self.n(),
            term_count: self.len(),
            terms: self
                .terms()
                .iter()
                .map(|t| TermDocument {
                    coefficient: t.coefficient.to_string(),
                    partition: t.partition.clone(),
                    fy_exponent: t.fy_exponent,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("formula documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: FormulaDocument =
            serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.schema != FORMULA_SCHEMA {
            return Err(Error::Document(format!("unsupported schema `{}`", doc.schema)));
        }
        if doc.term_count != doc.terms.len() {
            return Err(Error::Document(format!(
                "term_count {} disagrees with {} listed terms",
                doc.term_count,
                doc.terms.len()
            )));
        }
        let terms = doc
            .terms
            .into_iter()
            .map(|t| {
                let coefficient = t
                    .coefficient
                    .parse::<Integer>()
                    .map_err(|e| Error::Document(format!("bad coefficient `{}`: {e}", t.coefficient)))?;
                Ok(FormulaTerm {
                    partition: t.partition,
                    coefficient,
                    fy_exponent: t.fy_exponent,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        ImplicitDerivativeFormula::from_terms(doc.n, terms)
    }
}
