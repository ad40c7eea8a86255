//! The closed-form expansion
//!
//! ```text
//! dⁿy/dxⁿ = Σ_{p ⊢ (n, |p|−1), (0,1) ∉ p} (−1)^|p| α_p · F_{x,y,p} / F_y^|p|
//! ```
//!
//! where `F_{x,y,p}` is the product over the parts `(i, j)` of `p` of
//! `∂^{i+j}F / ∂x^i ∂y^j`.

mod cf;
mod render;

use std::collections::{BTreeSet, HashSet};

use num_bigint::Sign;
use crate::error::{Error, Result};
use crate::math::Integer;
use crate::partition::{alpha2d, enumerate_formula_partitions, Part, TwoDimPartition};

pub use cf::{cf_notation, cf_original_coefficient, cf_original_formula, CfNotation};
pub use render::{render, Format, FORMULA_SCHEMA};

/// One summand: `coefficient · F_{x,y,partition} / F_y^fy_exponent`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormulaTerm {
    pub partition: TwoDimPartition,
    /// Signed; the sign of a correct term is `(−1)^|p|`.
    pub coefficient: Integer,
    pub fy_exponent: u32,
}

impl FormulaTerm {
    pub fn new(partition: TwoDimPartition, coefficient: Integer) -> Self {
        let fy_exponent = partition.size() as u32;
        FormulaTerm {
            partition,
            coefficient,
            fy_exponent,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicitDerivativeFormula {
    n: u32,
    terms: Vec<FormulaTerm>,
}

impl ImplicitDerivativeFormula {
    /// Assembles a formula from explicit terms, checking that every partition
    /// belongs to the order-`n` index set, appears once, and carries the
    /// matching `F_y` power. Coefficients are taken as given. Terms are put in
    /// canonical order (descending partition order).
    pub fn from_terms(n: u32, mut terms: Vec<FormulaTerm>) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroOrder(n));
        }
        let mut seen = HashSet::new();
        for term in &terms {
            if !term.partition.is_formula_partition(n) {
                return Err(Error::Document(format!(
                    "partition {} does not index an order-{n} term",
                    term.partition
                )));
            }
            if term.fy_exponent as usize != term.partition.size() {
                return Err(Error::Document(format!(
                    "term {} has F_y exponent {}, expected {}",
                    term.partition,
                    term.fy_exponent,
                    term.partition.size()
                )));
            }
            if !seen.insert(term.partition.clone()) {
                return Err(Error::Document(format!("duplicate term {}", term.partition)));
            }
        }
        terms.sort_by(|a, b| b.partition.cmp(&a.partition));
        Ok(ImplicitDerivativeFormula { n, terms })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn terms(&self) -> &[FormulaTerm] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term(&self, partition: &TwoDimPartition) -> Option<&FormulaTerm> {
        self.terms
            .binary_search_by(|t| partition.cmp(&t.partition))
            .ok()
            .map(|k| &self.terms[k])
    }

    /// True when every coefficient has sign `(−1)^|p|`.
    pub fn has_alternating_signs(&self) -> bool {
        self.terms.iter().all(|t| {
            let want = if t.partition.size() % 2 == 0 {
                Sign::Plus
            } else {
                Sign::Minus
            };
            t.coefficient.sign() == want
        })
    }

    /// Copy with `delta` added to the coefficient of the term at `index`.
    pub fn with_perturbed_term(&self, index: usize, delta: i64) -> Self {
        let mut out = self.clone();
        if let Some(term) = out.terms.get_mut(index) {
            term.coefficient += delta;
        }
        out
    }
}

/// Builds the order-`n` expansion, one term per index partition.
pub fn build_formula(n: u32) -> Result<ImplicitDerivativeFormula> {
    let partitions = enumerate_formula_partitions(n)?;
    let mut terms = Vec::with_capacity(partitions.len());
    for p in partitions {
        let mut coefficient = alpha2d(&p)?;
        if p.size() % 2 == 1 {
            coefficient = -coefficient;
        }
        terms.push(FormulaTerm::new(p, coefficient));
    }
    // Enumeration already yields descending order, so this is a no-op sort.
    ImplicitDerivativeFormula::from_terms(n, terms)
}

/// The partial derivatives `F_{i,j}` an order-`n` evaluation needs: every
/// part of every term, plus `(0,1)`.
pub fn required_derivatives(n: u32) -> Result<BTreeSet<Part>> {
    let mut out: BTreeSet<Part> = enumerate_formula_partitions(n)?
        .iter()
        .flat_map(|p| p.parts().to_vec())
        .collect();
    out.insert(Part::new_unchecked(0, 1));
    Ok(out)
}
