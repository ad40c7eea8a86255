//! Comtet and Fiolet's notation and their original coefficient, which carries a
//! spurious factor `q`.

use num_traits::One;

use super::{FormulaTerm, ImplicitDerivativeFormula};
use crate::error::Result;
use crate::math::{expect_integer, factorial, Integer, Rational};
use crate::partition::{enumerate_formula_partitions, TwoDimPartition};

/// Row and column sums of a multiplicity table `d_{i,j} = e_{p,i,j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CfNotation {
    /// `l_k = Σ_j d_{k,j}`, indexed by `k`.
    pub row_sums: Vec<u32>,
    /// `c_k = Σ_i d_{i,k}`, indexed by `k`.
    pub column_sums: Vec<u32>,
    /// `S = Σ_{j≥2} c_j`.
    pub s: u32,
    /// `q = 1 + Σ_{j≥1} j c_{j+1}`.
    pub q: u32,
}

impl CfNotation {
    pub fn l(&self, k: u32) -> u32 {
        self.row_sums.get(k as usize).copied().unwrap_or(0)
    }

    pub fn c(&self, k: u32) -> u32 {
        self.column_sums.get(k as usize).copied().unwrap_or(0)
    }
}

pub fn cf_notation(p: &TwoDimPartition) -> CfNotation {
    let max_i = p.parts().iter().map(|x| x.i()).max().unwrap_or(0);
    let max_j = p.parts().iter().map(|x| x.j()).max().unwrap_or(0);
    let mut row_sums = vec![0; max_i as usize + 1];
    let mut column_sums = vec![0; max_j as usize + 1];
    for part in p.parts() {
        row_sums[part.i() as usize] += 1;
        column_sums[part.j() as usize] += 1;
    }
    let s = column_sums.iter().skip(2).sum();
    let q = 1 + column_sums
        .iter()
        .enumerate()
        .skip(2)
        .map(|(k, &c)| (k as u32 - 1) * c)
        .sum::<u32>();
    CfNotation {
        row_sums,
        column_sums,
        s,
        q,
    }
}

/// `n! q (m−1)! / (Π_k (k!)^{c_k + l_k} · Π d_{i,j}!)` with `m = |p|`:
/// the magnitude the original statement assigns to the term of `p`.
///
/// Computed from the row/column sums rather than through `alpha2d`, so the
/// identity `cf = q · α` is a genuine cross-check.
pub fn cf_original_coefficient(p: &TwoDimPartition) -> Result<Integer> {
    let notation = cf_notation(p);
    let m = p.size() as u32;
    let x_order: u32 = notation
        .row_sums
        .iter()
        .enumerate()
        .map(|(k, &l)| k as u32 * l)
        .sum();
    let numerator = factorial(x_order) * Integer::from(notation.q) * factorial(m - 1);
    let mut denominator = Integer::one();
    let width = notation.row_sums.len().max(notation.column_sums.len()) as u32;
    for k in 2..width {
        denominator *= num_traits::pow(factorial(k), (notation.l(k) + notation.c(k)) as usize);
    }
    for &d in p.multiplicities().values() {
        denominator *= factorial(d);
    }
    expect_integer(
        &Rational::new(numerator, denominator),
        format!("original coefficient of {p}"),
    )
}

/// The order-`n` expansion with every magnitude replaced by the original
/// coefficient, signs kept as `(−1)^|p|`.
pub fn cf_original_formula(n: u32) -> Result<ImplicitDerivativeFormula> {
    let mut terms = Vec::new();
    for p in enumerate_formula_partitions(n)? {
        let mut coefficient = cf_original_coefficient(&p)?;
        if p.size() % 2 == 1 {
            coefficient = -coefficient;
        }
        terms.push(FormulaTerm::new(p, coefficient));
    }
    ImplicitDerivativeFormula::from_terms(n, terms)
}
