//! Number of terms `a(n)` of the order-`n` expansion.
//!
//! `a(n)` is the coefficient of `t^n u^{n−1}` in
//! `F(u, t) = Π_{(i,j) ∈ E} 1 / (1 − t^i u^{i+j−1})`, where `E` is every pair
//! except `(0,0)` and `(0,1)`. Writing `F = Σ p_n(t) u^n` and
//! `log F = Σ q_m(t) u^m`, the relation `F G_u = F_u` gives
//! `p_n = (1/n) Σ_{s=1}^{n} s q_s p_{n−s}` starting from `p_0 = 1/(1 − t)`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::math::{expect_integer, Integer, Rational};
use crate::partition::enumerate_formula_partitions;
use crate::series::TruncatedSeries;

/// `q_m(t) = Σ_{r | m} Σ_{i=0}^{m/r + 1} t^{i r} / r`, truncated to `bound`.
///
/// Each divisor `r` is the power taken in `−log(1 − t^i u^{i+j−1})`, and
/// `m / r = i + j − 1` fixes `j` once `i` is chosen.
pub fn q_series(m: u32, bound: u32) -> TruncatedSeries {
    assert!(m >= 1, "q_m is only used for m >= 1");
    let mut q = TruncatedSeries::zero(bound);
    for r in (1..=m).filter(|r| m.is_multiple_of(*r)) {
        let weight = Rational::new(1.into(), r.into());
        for i in 0..=(m / r + 1) {
            let degree = i as u64 * r as u64;
            if degree <= bound as u64 {
                q.add_monomial(degree as u32, &weight);
            }
        }
    }
    q
}

/// `[p_0, …, p_max_index]`, each truncated to `bound ≥ max_index`.
pub fn p_series_table(max_index: u32, bound: u32) -> Result<Vec<TruncatedSeries>> {
    if bound < max_index {
        return Err(Error::SeriesBound {
            index: max_index,
            bound,
        });
    }
    let q: Vec<TruncatedSeries> = (1..=max_index.max(1)).map(|m| q_series(m, bound)).collect();
    let mut table = Vec::with_capacity(max_index as usize + 1);
    table.push(TruncatedSeries::geometric(bound));
    for n in 1..=max_index {
        let mut acc = TruncatedSeries::zero(bound);
        for s in 1..=n {
            let term = &q[s as usize - 1] * &table[(n - s) as usize];
            acc = &acc + &term.scale(&Rational::from_integer(s.into()));
        }
        table.push(acc.scale(&Rational::new(1.into(), n.into())));
    }
    Ok(table)
}

/// `a(n)` from the generating function: the `t^n` coefficient of `p_{n−1}`.
pub fn a_count_gf(n: u32) -> Result<Integer> {
    Ok(a_counts_gf(n, n)?.pop().expect("n >= 1 gives one entry"))
}

/// `[a(1), …, a(max)]` from a single `p`-table truncated at `bound ≥ max`.
pub fn a_counts_gf(max: u32, bound: u32) -> Result<Vec<Integer>> {
    if max == 0 {
        return Err(Error::ZeroOrder(max));
    }
    if bound < max {
        return Err(Error::SeriesBound { index: max, bound });
    }
    let table = p_series_table(max - 1, bound)?;
    (1..=max)
        .map(|n| {
            let c = table[(n - 1) as usize].coefficient(n);
            let value = expect_integer(&c, format!("a({n}) from the generating function"))?;
            if value <= Integer::zero() {
                return Err(Error::NonIntegral {
                    what: format!("a({n}) must be positive"),
                    value: value.to_string(),
                });
            }
            Ok(value)
        })
        .collect()
}

/// `a(n)` by enumerating the index set directly.
pub fn a_count_enum(n: u32) -> Result<Integer> {
    Ok(Integer::from(enumerate_formula_partitions(n)?.len()))
}

/// Coefficient of `t^n u^{n−1}` in `Π_{(i,j) ∈ E} 1 / (1 − t^i u^j)`, the
/// historical (incorrect) count of terms.
///
/// Only factors with `i ≤ n` and `j ≤ n − 1` can reach that monomial, so the
/// bivariate product is truncated there.
pub fn cf_count_coefficient(n: u32) -> Result<Integer> {
    if n == 0 {
        return Err(Error::ZeroOrder(n));
    }
    let (t_max, u_max) = (n as usize, n as usize - 1);
    let mut c = vec![vec![Integer::zero(); u_max + 1]; t_max + 1];
    c[0][0] = Integer::from(1);
    for i in 0..=t_max {
        for j in 0..=u_max {
            if (i, j) == (0, 0) || (i, j) == (0, 1) {
                continue;
            }
            // Multiplying by 1/(1 - t^i u^j) in place: ascending sweep.
            for a in i..=t_max {
                for b in j..=u_max {
                    let prev = c[a - i][b - j].clone();
                    c[a][b] += prev;
                }
            }
        }
    }
    Ok(c[t_max][u_max].clone())
}
