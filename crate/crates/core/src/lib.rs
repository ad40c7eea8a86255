//! Closed-form higher derivatives `dⁿy/dxⁿ` of a function defined implicitly by
//! `F(x, y) = 0`.
//!
//! The expansion is indexed by two-dimensional partitions `p ⊢ (n, |p| − 1)`
//! with no `(0,1)` part; each term is `(−1)^|p| α_p · Π F_{i,j} / F_y^|p|`.
//! Besides building that expansion the crate carries an independent symbolic
//! engine that re-derives it by repeated total differentiation, term counting
//! through a generating function, the historical Comtet and Fiolet coefficient and
//! count for comparison, and a small numeric front-end for concrete `F`.

pub mod counting;
pub mod error;
pub mod formula;
pub mod math;
pub mod numeric;
pub mod oracle;
pub mod partition;
pub mod series;

pub use error::{Error, Result};
pub use formula::{build_formula, FormulaTerm, ImplicitDerivativeFormula};
pub use partition::{OneDimPartition, Part, TwoDimPartition};
