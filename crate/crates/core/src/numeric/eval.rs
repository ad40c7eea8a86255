use std::collections::BTreeMap;

use num_traits::ToPrimitive;

use super::diff::PartialCache;
use super::expr::Expression;
use crate::error::{Error, Result};
use crate::formula::{build_formula, required_derivatives, ImplicitDerivativeFormula};
use crate::math::binomial;
use crate::partition::Part;

/// Points with `|F(x0, y0)|` above this are flagged as off the curve.
pub const OFF_CURVE_THRESHOLD: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalConfig {
    pub singular_tolerance: f64,
    pub newton_tolerance: f64,
    pub newton_max_iter: usize,
    pub fd_step: f64,
}

impl Default for EvalConfig {
    fn default() -> Self {
        EvalConfig {
            singular_tolerance: 1e-12,
            newton_tolerance: 1e-13,
            newton_max_iter: 64,
            fd_step: 1e-3,
        }
    }
}

impl EvalConfig {
    pub fn validate(&self) -> Result<()> {
        let reals = [
            ("singular_tolerance", self.singular_tolerance),
            ("newton_tolerance", self.newton_tolerance),
            ("fd_step", self.fd_step),
        ];
        for (name, value) in reals {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidConfig(format!("{name} must be positive, got {value}")));
            }
        }
        if self.newton_max_iter == 0 {
            return Err(Error::InvalidConfig("newton_max_iter must be positive".into()));
        }
        Ok(())
    }
}

/// Values of the partials `F_{i,j}` at one point.
#[derive(Debug, Clone, PartialEq)]
pub struct DerivativeTable {
    x: f64,
    y: f64,
    entries: BTreeMap<Part, f64>,
    residual: f64,
    singular_tolerance: f64,
}

impl DerivativeTable {
    /// Builds a table from given values. `residual` is `F(x, y)`.
    pub fn from_entries(
        x: f64,
        y: f64,
        entries: BTreeMap<Part, f64>,
        residual: f64,
        singular_tolerance: f64,
    ) -> Result<Self> {
        let table = DerivativeTable {
            x,
            y,
            entries,
            residual,
            singular_tolerance,
        };
        table.fy()?;
        Ok(table)
    }

    pub fn point(&self) -> (f64, f64) {
        (self.x, self.y)
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn entries(&self) -> &BTreeMap<Part, f64> {
        &self.entries
    }

    pub fn get(&self, i: u32, j: u32) -> Result<f64> {
        let part = Part::new(i, j).map_err(|_| Error::MissingEntry { i, j })?;
        self.entries
            .get(&part)
            .copied()
            .ok_or(Error::MissingEntry { i, j })
    }

    fn fy(&self) -> Result<f64> {
        let fy = self.get(0, 1)?;
        if fy.is_nan() || fy.abs() <= self.singular_tolerance {
            return Err(Error::SingularPoint { fy });
        }
        Ok(fy)
    }

    pub fn is_off_curve(&self) -> bool {
        self.residual.is_nan() || self.residual.abs() > OFF_CURVE_THRESHOLD
    }

    pub fn off_curve_warning(&self) -> Option<String> {
        self.is_off_curve().then(|| {
            format!(
                "point ({}, {}) is not on the curve: |F| = {:e}",
                self.x,
                self.y,
                self.residual.abs()
            )
        })
    }
}

pub fn derivative_table(
    e: &Expression,
    x0: f64,
    y0: f64,
    n: u32,
    cfg: &EvalConfig,
) -> Result<DerivativeTable> {
    cfg.validate()?;
    let mut partials = PartialCache::new(e);
    let entries = required_derivatives(n)?
        .into_iter()
        .map(|part| (part, partials.get(part.i(), part.j()).eval(x0, y0)))
        .collect();
    let residual = e.eval(x0, y0);
    DerivativeTable::from_entries(x0, y0, entries, residual, cfg.singular_tolerance)
}

/// Sums the formula's terms in their stored (canonical) order.
pub fn evaluate(formula: &ImplicitDerivativeFormula, table: &DerivativeTable) -> Result<f64> {
    let fy = table.fy()?;
    let mut total = 0.0;
    for term in formula.terms() {
        let mut value = term.coefficient.to_f64().unwrap_or(f64::NAN);
        for part in term.partition.parts() {
            value *= table.get(part.i(), part.j())?;
        }
        value /= fy.powi(term.fy_exponent as i32);
        total += value;
    }
    Ok(total)
}

pub fn evaluate_formula(n: u32, table: &DerivativeTable) -> Result<f64> {
    evaluate(&build_formula(n)?, table)
}

/// Newton iteration in `y` for fixed `x`. One extra step is taken after the
/// tolerance is met, which brings the root to roughly machine precision.
pub fn implicit_solve(e: &Expression, x: f64, y_guess: f64, cfg: &EvalConfig) -> Result<f64> {
    cfg.validate()?;
    let fy_expr = PartialCache::new(e).get(0, 1);
    let mut y = y_guess;
    let mut residual = e.eval(x, y);
    for _ in 0..cfg.newton_max_iter {
        if !residual.is_finite() || !y.is_finite() {
            break;
        }
        let converged = residual.abs() <= cfg.newton_tolerance;
        let slope = fy_expr.eval(x, y);
        if slope.is_nan() || slope.abs() <= cfg.singular_tolerance {
            if converged {
                return Ok(y);
            }
            return Err(Error::DerivativeUnderflow { y });
        }
        let next = y - residual / slope;
        if converged {
            // Keep the polished value only if it is no worse.
            let polished = e.eval(x, next);
            return Ok(if polished.abs() <= residual.abs() { next } else { y });
        }
        y = next;
        residual = e.eval(x, y);
    }
    if residual.abs() <= cfg.newton_tolerance {
        return Ok(y);
    }
    Err(Error::NonConvergence {
        iterations: cfg.newton_max_iter,
        residual: residual.abs(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FdComparison {
    pub formula_value: f64,
    pub fd_value: f64,
    pub abs_diff: f64,
}

/// Central-difference weights for the n-th derivative on integer offsets
/// `-half..=half`, where `half = ceil(n/2)`.
fn central_weights(n: u32) -> Vec<(i64, f64)> {
    // delta^n f(x) = sum_r (-1)^r C(n,r) f(x + (n/2 - r) h). For odd n the
    // offsets are half-integers, so the two stencils at x -+ h/2 are averaged.
    let shifts: &[f64] = if n.is_multiple_of(2) { &[0.0] } else { &[-0.5, 0.5] };
    let mut weights: BTreeMap<i64, f64> = BTreeMap::new();
    for &shift in shifts {
        for r in 0..=n {
            let offset = f64::from(n) / 2.0 - f64::from(r) + shift;
            let c = binomial(n, r).to_f64().unwrap_or(f64::NAN);
            let sign = if r % 2 == 0 { 1.0 } else { -1.0 };
            *weights.entry(offset.round() as i64).or_default() += sign * c / shifts.len() as f64;
        }
    }
    weights.into_iter().collect()
}

pub fn finite_difference_check(
    e: &Expression,
    x0: f64,
    y0: f64,
    n: u32,
    cfg: &EvalConfig,
) -> Result<FdComparison> {
    let table = derivative_table(e, x0, y0, n, cfg)?;
    let formula_value = evaluate_formula(n, &table)?;
    let h = cfg.fd_step;
    let mut sum = 0.0;
    for (k, w) in central_weights(n) {
        let x = x0 + k as f64 * h;
        sum += w * implicit_solve(e, x, y0, cfg)?;
    }
    let fd_value = sum / h.powi(n as i32);
    Ok(FdComparison {
        formula_value,
        fd_value,
        abs_diff: (formula_value - fd_value).abs(),
    })
}
