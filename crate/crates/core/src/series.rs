//! Univariate power series with exact rational coefficients, truncated at a
//! fixed degree bound.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::Zero;

use crate::math::Rational;

/// Coefficients for degrees `0..=bound`; everything above is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coefficients: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn zero(bound: u32) -> Self {
        TruncatedSeries {
            coefficients: vec![Rational::zero(); bound as usize + 1],
        }
    }

    /// Pads or truncates `coefficients` to `bound`.
    pub fn from_coefficients(mut coefficients: Vec<Rational>, bound: u32) -> Self {
        coefficients.resize(bound as usize + 1, Rational::zero());
        TruncatedSeries { coefficients }
    }

    /// `1 + t + t² + … + t^bound`, i.e. `1/(1 − t)` truncated.
    pub fn geometric(bound: u32) -> Self {
        TruncatedSeries {
            coefficients: vec![Rational::from_integer(1.into()); bound as usize + 1],
        }
    }

    pub fn bound(&self) -> u32 {
        (self.coefficients.len() - 1) as u32
    }

    /// Coefficient of `t^degree`; zero above the bound.
    pub fn coefficient(&self, degree: u32) -> Rational {
        self.coefficients
            .get(degree as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    /// Adds `value · t^degree`, ignoring degrees above the bound.
    pub fn add_monomial(&mut self, degree: u32, value: &Rational) {
        if let Some(c) = self.coefficients.get_mut(degree as usize) {
            *c += value;
        }
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        TruncatedSeries {
            coefficients: self.coefficients.iter().map(|c| c * factor).collect(),
        }
    }

    fn common_bound(&self, other: &Self) -> usize {
        self.coefficients.len().min(other.coefficients.len())
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let len = self.common_bound(rhs);
        TruncatedSeries {
            coefficients: (0..len)
                .map(|k| &self.coefficients[k] + &rhs.coefficients[k])
                .collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;

    /// Product truncated at the smaller of the two bounds.
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let len = self.common_bound(rhs);
        let mut coefficients = vec![Rational::zero(); len];
        for (a, ca) in self.coefficients.iter().enumerate().take(len) {
            if ca.is_zero() {
                continue;
            }
            for (b, cb) in rhs.coefficients.iter().enumerate().take(len - a) {
                if !cb.is_zero() {
                    coefficients[a + b] += ca * cb;
                }
            }
        }
        TruncatedSeries { coefficients }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.coefficients.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn series(ints: &[i64], bound: u32) -> TruncatedSeries {
        TruncatedSeries::from_coefficients(
            ints.iter().map(|&v| Rational::from_integer(v.into())).collect(),
            bound,
        )
    }

    #[test]
    fn multiplication_truncates() {
        let one_plus_t = series(&[1, 1], 3);
        let cube = &(&one_plus_t * &one_plus_t) * &one_plus_t;
        assert_eq!(cube, series(&[1, 3, 3, 1], 3));
        let fourth = &cube * &one_plus_t;
        assert_eq!(fourth, series(&[1, 4, 6, 4], 3));
        assert_eq!(fourth.coefficient(7), Rational::zero());
    }

    #[test]
    fn geometric_inverts_one_minus_t() {
        let one_minus_t = series(&[1, -1], 6);
        assert_eq!(&TruncatedSeries::geometric(6) * &one_minus_t, series(&[1], 6));
    }

    #[test]
    fn display() {
        assert_eq!(series(&[0, 2, 0, -1], 3).to_string(), "2*t + -1*t^3 + O(t^4)");
    }

    fn small_series() -> impl Strategy<Value = TruncatedSeries> {
        prop::collection::vec((-5i64..=5, 1i64..=4), 0..7).prop_map(|cs| {
            let coefficients = cs
                .into_iter()
                .map(|(n, d)| Rational::new(n.into(), d.into()))
                .collect();
            TruncatedSeries::from_coefficients(coefficients, 5)
        })
    }

    proptest! {
        #[test]
        fn product_is_commutative(f in small_series(), g in small_series()) {
            prop_assert_eq!(&f * &g, &g * &f);
        }

        #[test]
        fn product_is_associative(f in small_series(), g in small_series(), h in small_series()) {
            prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        }

        #[test]
        fn product_distributes(f in small_series(), g in small_series(), h in small_series()) {
            prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        }
    }
}
