//! Numerical evaluation of implicit derivatives for a concrete `F(x, y)`.

pub mod diff;
pub mod eval;
pub mod expr;
pub mod parse;

pub use diff::{derivative, mixed_partial, PartialCache, Variable};
pub use eval::{
    derivative_table, evaluate, evaluate_formula, finite_difference_check, implicit_solve,
    DerivativeTable, EvalConfig, FdComparison, OFF_CURVE_THRESHOLD,
};
pub use expr::{Expression, Function, Node};
pub use parse::parse;
