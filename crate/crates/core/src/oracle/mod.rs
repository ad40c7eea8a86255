//! Brute-force re-derivation of the expansion by repeated total
//! differentiation, used to check [`build_formula`](crate::build_formula)
//! term by term.
//!
//! Symbols are the partials `F_{i,j}`, keyed by [`Part`]. Starting from
//! `dy/dx = −F_{1,0} F_{0,1}^{−1}`, each order applies
//! `D = ∂/∂x + y′ ∂/∂y` with `∂/∂x F_{i,j} = F_{i+1,j}` and
//! `∂/∂y F_{i,j} = F_{i,j+1}`. Only `F_{0,1}` ever carries a negative
//! exponent.

pub mod algebra;

use std::collections::BTreeSet;
use std::fmt;

use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formula::{build_formula, cf_notation, ImplicitDerivativeFormula};
use crate::math::{Integer, Rational};
use crate::partition::{Part, TwoDimPartition};

pub use algebra::{Exponents, Expr, Monomial};

/// Polynomial in the `F_{i,j}` with `F_{0,1}` allowed negative powers.
pub type SymbolicExpr = Expr<Part>;

const FX: Part = Part::new_unchecked(1, 0);
const FY: Part = Part::new_unchecked(0, 1);

fn neg_one() -> Rational {
    -Rational::one()
}

/// `y′ = −F_{1,0} · F_{0,1}^{−1}`.
pub fn first_derivative() -> SymbolicExpr {
    Expr::monomial(neg_one(), [(FX, 1), (FY, -1)])
}

/// `D e = ∂e/∂x + y′ · ∂e/∂y`.
pub fn total_derivative(e: &SymbolicExpr) -> SymbolicExpr {
    let dx = e.derive(|s| Expr::symbol(Part::new_unchecked(s.i() + 1, s.j())));
    let dy = e.derive(|s| Expr::symbol(Part::new_unchecked(s.i(), s.j() + 1)));
    &dx + &(&dy * &first_derivative())
}

/// `Dⁿ⁻¹ y′`, the order-`n` derivative expanded in the `F_{i,j}`.
pub fn oracle_expansion(n: u32) -> Result<SymbolicExpr> {
    Ok(oracle_expansions(n)?.pop().expect("n >= 1"))
}

/// `[d¹y/dx¹, …, dⁿy/dxⁿ]`, reusing each order for the next.
pub fn oracle_expansions(max: u32) -> Result<Vec<SymbolicExpr>> {
    if max == 0 {
        return Err(Error::ZeroOrder(max));
    }
    let mut out = vec![first_derivative()];
    for _ in 1..max {
        let next = total_derivative(out.last().expect("non-empty"));
        out.push(next);
    }
    Ok(out)
}

/// `coefficient · Π F_part / F_y^fy_exponent` for every term.
pub fn formula_to_expr(f: &ImplicitDerivativeFormula) -> SymbolicExpr {
    let mut out = SymbolicExpr::zero();
    for term in f.terms() {
        let mut exponents = Exponents::new();
        for &part in term.partition.parts() {
            *exponents.entry(part).or_insert(0) += 1;
        }
        *exponents.entry(FY).or_insert(0) -= term.fy_exponent as i32;
        exponents.retain(|_, e| *e != 0);
        out.add_term(exponents, Rational::from_integer(term.coefficient.clone()));
    }
    out
}

/// Applies one total derivative to the order-`n − 1` expansion.
pub fn induction_step(previous: &ImplicitDerivativeFormula) -> SymbolicExpr {
    total_derivative(&formula_to_expr(previous))
}

/// Reads a formula-shaped monomial back as a partition: positive exponents
/// become parts. `None` for the constant monomial.
pub fn monomial_partition(exponents: &Exponents<Part>) -> Option<TwoDimPartition> {
    let parts: Vec<Part> = exponents
        .iter()
        .filter(|(_, &e)| e > 0)
        .flat_map(|(&p, &e)| std::iter::repeat_n(p, e as usize))
        .collect();
    TwoDimPartition::new(parts).ok()
}

/// True when the only negative exponent is on `F_{0,1}` and it equals minus
/// the sum of the positive exponents, i.e. the monomial has the shape
/// `F_{x,y,p} / F_y^|p|`.
pub fn has_formula_shape(exponents: &Exponents<Part>) -> bool {
    let positive: i32 = exponents.values().filter(|&&e| e > 0).sum();
    let negative_ok = exponents.iter().all(|(&p, &e)| e > 0 || p == FY);
    negative_ok && exponents.get(&FY).copied().unwrap_or(0) == -positive
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ComparisonStatus {
    Equal,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonomialRecord {
    pub coefficient: String,
    /// `[i, j, exponent]` triples.
    pub factors: Vec<[i64; 3]>,
}

impl MonomialRecord {
    fn new(exponents: &Exponents<Part>, coefficient: &Rational) -> Self {
        MonomialRecord {
            coefficient: coefficient.to_string(),
            factors: exponents
                .iter()
                .map(|(p, &e)| [p.i() as i64, p.j() as i64, e as i64])
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientMismatch {
    pub partition: TwoDimPartition,
    /// Oracle value.
    pub expected: String,
    /// Formula value.
    pub found: String,
}

/// Outcome of comparing a formula against an oracle expansion.
/// `missing` lists oracle monomials the formula lacks; `extra` lists formula
/// monomials the oracle does not produce.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub n: u32,
    pub status: ComparisonStatus,
    pub missing: Vec<MonomialRecord>,
    pub extra: Vec<MonomialRecord>,
    pub coefficient_mismatches: Vec<CoefficientMismatch>,
}

impl ComparisonReport {
    pub fn is_equal(&self) -> bool {
        self.status == ComparisonStatus::Equal
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

impl fmt::Display for ComparisonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.status {
            ComparisonStatus::Equal => write!(f, "n={}: equal", self.n),
            ComparisonStatus::Mismatch => write!(
                f,
                "n={}: mismatch ({} missing, {} extra, {} coefficient mismatches)",
                self.n,
                self.missing.len(),
                self.extra.len(),
                self.coefficient_mismatches.len()
            ),
        }
    }
}

/// Exact monomial-by-monomial comparison.
pub fn compare(formula: &ImplicitDerivativeFormula, oracle: &SymbolicExpr) -> ComparisonReport {
    let found = formula_to_expr(formula);
    let mut missing = Vec::new();
    let mut extra = Vec::new();
    let mut coefficient_mismatches = Vec::new();
    for (exponents, expected) in oracle.terms() {
        let got = found.coefficient(exponents);
        if got == Rational::default() {
            missing.push(MonomialRecord::new(exponents, expected));
        } else if &got != expected {
            coefficient_mismatches.push(CoefficientMismatch {
                partition: monomial_partition(exponents).expect("formula monomials have parts"),
                expected: expected.to_string(),
                found: got.to_string(),
            });
        }
    }
    for (exponents, got) in found.terms() {
        if oracle.coefficient(exponents) == Rational::default() {
            extra.push(MonomialRecord::new(exponents, got));
        }
    }
    let status = if missing.is_empty() && extra.is_empty() && coefficient_mismatches.is_empty() {
        ComparisonStatus::Equal
    } else {
        ComparisonStatus::Mismatch
    };
    ComparisonReport {
        n: formula.n(),
        status,
        missing,
        extra,
        coefficient_mismatches,
    }
}

pub fn compare_with_formula(n: u32) -> Result<ComparisonReport> {
    Ok(compare(&build_formula(n)?, &oracle_expansion(n)?))
}

/// Checks a report produced for the original (factor-`q`) coefficients: no
/// missing or extra monomials, and the mismatched terms are exactly those
/// with `q > 1`, each off by precisely that factor.
pub fn matches_q_prediction(report: &ComparisonReport) -> Result<bool> {
    if !report.missing.is_empty() || !report.extra.is_empty() {
        return Ok(false);
    }
    let predicted: BTreeSet<TwoDimPartition> = build_formula(report.n)?
        .terms()
        .iter()
        .filter(|t| cf_notation(&t.partition).q > 1)
        .map(|t| t.partition.clone())
        .collect();
    let mut seen = BTreeSet::new();
    for m in &report.coefficient_mismatches {
        let q = Integer::from(cf_notation(&m.partition).q);
        let expected: Integer = m
            .expected
            .parse()
            .map_err(|_| Error::Document(format!("non-integer coefficient {}", m.expected)))?;
        let found: Integer = m
            .found
            .parse()
            .map_err(|_| Error::Document(format!("non-integer coefficient {}", m.found)))?;
        if found != expected * q {
            return Ok(false);
        }
        seen.insert(m.partition.clone());
    }
    Ok(seen == predicted)
}

/// Symbols of the chain-rule algebra for `z(y(x))`: `Z(k) = dᵏz/dyᵏ` and
/// `Y(k) = dᵏy/dxᵏ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ChainSymbol {
    Z(u32),
    Y(u32),
}

pub type ChainSymbolExpr = Expr<ChainSymbol>;

/// `dⁿz/dxⁿ` by `n` applications of `d/dx z_k = z_{k+1} y_1`,
/// `d/dx y_k = y_{k+1}`, starting from `z = z_0`.
pub fn faa_di_bruno_expansion(n: u32) -> Result<ChainSymbolExpr> {
    if n == 0 {
        return Err(Error::ZeroOrder(n));
    }
    let mut e = ChainSymbolExpr::symbol(ChainSymbol::Z(0));
    for _ in 0..n {
        e = e.derive(|s| match *s {
            ChainSymbol::Z(k) => ChainSymbolExpr::monomial(
                Rational::one(),
                [(ChainSymbol::Z(k + 1), 1), (ChainSymbol::Y(1), 1)],
            ),
            ChainSymbol::Y(k) => ChainSymbolExpr::symbol(ChainSymbol::Y(k + 1)),
        });
    }
    Ok(e)
}
