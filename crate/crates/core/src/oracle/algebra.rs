//! Sparse Laurent polynomials over an ordered symbol set with exact rational
//! coefficients. Like monomials are merged on insertion and zero
//! coefficients are dropped, so equality is structural.

use std::collections::BTreeMap;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::math::Rational;

/// Symbol → (non-zero) exponent.
pub type Exponents<S> = BTreeMap<S, i32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial<S: Ord> {
    pub coefficient: Rational,
    pub exponents: Exponents<S>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expr<S: Ord> {
    terms: BTreeMap<Exponents<S>, Rational>,
}

impl<S: Ord + Clone> Default for Expr<S> {
    fn default() -> Self {
        Expr::zero()
    }
}

fn merge_exponents<S: Ord + Clone>(a: &Exponents<S>, b: &Exponents<S>) -> Exponents<S> {
    let mut out = a.clone();
    for (s, &e) in b {
        let slot = out.entry(s.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            out.remove(s);
        }
    }
    out
}

impl<S: Ord + Clone> Expr<S> {
    pub fn zero() -> Self {
        Expr {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut e = Expr::zero();
        e.add_term(Exponents::new(), c);
        e
    }

    pub fn one() -> Self {
        Expr::constant(Rational::one())
    }

    pub fn symbol(s: S) -> Self {
        Expr::monomial(Rational::one(), [(s, 1)])
    }

    pub fn monomial(coefficient: Rational, exponents: impl IntoIterator<Item = (S, i32)>) -> Self {
        let mut exps = Exponents::new();
        for (s, e) in exponents {
            *exps.entry(s).or_insert(0) += e;
        }
        exps.retain(|_, e| *e != 0);
        let mut out = Expr::zero();
        out.add_term(exps, coefficient);
        out
    }

    /// Adds `coefficient · exponents`, merging with any like monomial.
    pub fn add_term(&mut self, exponents: Exponents<S>, coefficient: Rational) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.get_mut(&exponents) {
            Some(c) => {
                *c += coefficient;
                if c.is_zero() {
                    self.terms.remove(&exponents);
                }
            }
            None => {
                self.terms.insert(exponents, coefficient);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents<S>, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exponents: &Exponents<S>) -> Rational {
        self.terms.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn monomials(&self) -> Vec<Monomial<S>> {
        self.terms
            .iter()
            .map(|(exponents, coefficient)| Monomial {
                coefficient: coefficient.clone(),
                exponents: exponents.clone(),
            })
            .collect()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        if factor.is_zero() {
            return Expr::zero();
        }
        Expr {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), c * factor))
                .collect(),
        }
    }

    /// Applies the derivation that sends each symbol `s` to `d(s)`, extended
    /// by the Leibniz and power rules (negative exponents included).
    pub fn derive(&self, d: impl Fn(&S) -> Expr<S>) -> Expr<S> {
        let mut out = Expr::zero();
        for (exponents, coefficient) in &self.terms {
            for (s, &e) in exponents {
                let image = d(s);
                if image.is_zero() {
                    continue;
                }
                let mut reduced = exponents.clone();
                if e == 1 {
                    reduced.remove(s);
                } else {
                    reduced.insert(s.clone(), e - 1);
                }
                let factor = coefficient * Rational::from_integer(e.into());
                for (img_exps, img_coeff) in &image.terms {
                    out.add_term(merge_exponents(&reduced, img_exps), &factor * img_coeff);
                }
            }
        }
        out
    }
}

impl<S: Ord + Clone> Add for &Expr<S> {
    type Output = Expr<S>;

    fn add(self, rhs: &Expr<S>) -> Expr<S> {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl<S: Ord + Clone> Mul for &Expr<S> {
    type Output = Expr<S>;

    fn mul(self, rhs: &Expr<S>) -> Expr<S> {
        let mut out = Expr::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &rhs.terms {
                out.add_term(merge_exponents(ka, kb), ca * cb);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type E = Expr<char>;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn like_terms_merge_and_cancel() {
        let a = E::monomial(r(2), [('x', 1), ('y', -1)]);
        let b = E::monomial(r(-2), [('y', -1), ('x', 1)]);
        assert!((&a + &b).is_zero());
        assert_eq!((&a + &a).coefficient(&[('x', 1), ('y', -1)].into_iter().collect()), r(4));
    }

    #[test]
    fn product_merges_exponents() {
        let a = E::monomial(r(3), [('x', 2), ('y', -1)]);
        let b = E::monomial(r(1), [('y', 1)]);
        assert_eq!(&a * &b, E::monomial(r(3), [('x', 2)]));
    }

    #[test]
    fn derivation_power_rule() {
        // d/dx (x^3 y^-2) with y' = 1: 3x^2 y^-2 - 2 x^3 y^-3
        let e = E::monomial(r(1), [('x', 3), ('y', -2)]);
        let d = e.derive(|_| E::one());
        let expected = &E::monomial(r(3), [('x', 2), ('y', -2)]) + &E::monomial(r(-2), [('x', 3), ('y', -3)]);
        assert_eq!(d, expected);
    }

    #[test]
    fn constants_differentiate_to_zero() {
        assert!(E::one().derive(|_| E::one()).is_zero());
        assert!(E::constant(r(7)).derive(|_| E::symbol('z')).is_zero());
    }
}
