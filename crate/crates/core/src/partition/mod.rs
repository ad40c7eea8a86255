//! One- and two-dimensional partitions and their multinomial weights.
//!
//! Parts of a two-dimensional partition are pairs `(i, j)` of derivative
//! orders (`i` in `x`, `j` in `y`), stored in lexicographically non-increasing
//! order. The pair of coordinate sums is always written `(x-sum, y-sum)`.

mod enumerate;
mod moves;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::math::{expect_integer, factorial, Integer, Rational};

pub use enumerate::{enumerate_1d, enumerate_2d, enumerate_formula_partitions};
pub use moves::{a_move, b_move, lemma_relations, remove_parts, LemmaCase, LemmaRelation};

/// A pair `(i, j) ≠ (0, 0)` standing for `∂^{i+j}F / ∂x^i ∂y^j`.
///
/// The derived ordering is the lexicographic one: first coordinate dominates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[u32; 2]", into = "[u32; 2]")]
pub struct Part {
    i: u32,
    j: u32,
}

impl Part {
    pub fn new(i: u32, j: u32) -> Result<Self> {
        if i == 0 && j == 0 {
            return Err(Error::InvalidPart { i, j });
        }
        Ok(Part { i, j })
    }

    pub(crate) const fn new_unchecked(i: u32, j: u32) -> Self {
        Part { i, j }
    }

    /// Order of differentiation in `x`.
    pub fn i(self) -> u32 {
        self.i
    }

    /// Order of differentiation in `y`.
    pub fn j(self) -> u32 {
        self.j
    }

    pub fn pair(self) -> (u32, u32) {
        (self.i, self.j)
    }
}

impl TryFrom<[u32; 2]> for Part {
    type Error = Error;

    fn try_from([i, j]: [u32; 2]) -> Result<Self> {
        Part::new(i, j)
    }
}

impl From<Part> for [u32; 2] {
    fn from(p: Part) -> Self {
        [p.i, p.j]
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

pub fn lex_compare(a: Part, b: Part) -> Ordering {
    a.cmp(&b)
}

/// A multiset of [`Part`]s in canonical (non-increasing) order.
///
/// Ordering between partitions compares the part sequences lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Part>", into = "Vec<Part>")]
pub struct TwoDimPartition {
    parts: Vec<Part>,
    x_sum: u32,
    y_sum: u32,
}

impl TwoDimPartition {
    pub fn new(parts: impl IntoIterator<Item = Part>) -> Result<Self> {
        canonicalize(parts)
    }

    /// Builds a partition from raw `(i, j)` pairs, rejecting `(0, 0)`.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Result<Self> {
        let parts = pairs
            .iter()
            .map(|&(i, j)| Part::new(i, j))
            .collect::<Result<Vec<_>>>()?;
        canonicalize(parts)
    }

    /// Caller guarantees `parts` is non-empty and already sorted descending.
    pub(crate) fn from_sorted_unchecked(parts: Vec<Part>) -> Self {
        debug_assert!(!parts.is_empty());
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let x_sum = parts.iter().map(|p| p.i).sum();
        let y_sum = parts.iter().map(|p| p.j).sum();
        TwoDimPartition { parts, x_sum, y_sum }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    /// Sum of the first coordinates.
    pub fn x_sum(&self) -> u32 {
        self.x_sum
    }

    /// Sum of the second coordinates.
    pub fn y_sum(&self) -> u32 {
        self.y_sum
    }

    /// Number of parts, `|p|`.
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// `e_{p,k,l}`: how many times `(k, l)` occurs.
    pub fn multiplicity(&self, k: u32, l: u32) -> u32 {
        self.parts.iter().filter(|p| p.i == k && p.j == l).count() as u32
    }

    pub fn contains(&self, k: u32, l: u32) -> bool {
        self.parts.iter().any(|p| p.i == k && p.j == l)
    }

    /// Multiplicity table keyed by part; iteration follows ascending lex order.
    pub fn multiplicities(&self) -> BTreeMap<Part, u32> {
        let mut table = BTreeMap::new();
        for &p in &self.parts {
            *table.entry(p).or_insert(0) += 1;
        }
        table
    }

    /// True when `p ⊢ (n, |p| − 1)` and `(0,1) ∉ p`, i.e. `p` indexes a term
    /// of the order-`n` expansion.
    pub fn is_formula_partition(&self, n: u32) -> bool {
        self.x_sum == n && self.y_sum as usize + 1 == self.size() && !self.contains(0, 1)
    }

    pub fn to_pairs(&self) -> Vec<[u32; 2]> {
        self.parts.iter().map(|&p| p.into()).collect()
    }
}

impl TryFrom<Vec<Part>> for TwoDimPartition {
    type Error = Error;

    fn try_from(parts: Vec<Part>) -> Result<Self> {
        canonicalize(parts)
    }
}

impl From<TwoDimPartition> for Vec<Part> {
    fn from(p: TwoDimPartition) -> Self {
        p.parts
    }
}

impl fmt::Display for TwoDimPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, part) in self.parts.iter().enumerate() {
            if k > 0 {
                f.write_str("+")?;
            }
            write!(f, "{part}")?;
        }
        Ok(())
    }
}

/// Sorts `parts` into canonical order. Fails on an empty input or on `(0,0)`.
pub fn canonicalize(parts: impl IntoIterator<Item = Part>) -> Result<TwoDimPartition> {
    let mut parts: Vec<Part> = parts.into_iter().collect();
    if parts.is_empty() {
        return Err(Error::EmptyPartition);
    }
    if let Some(bad) = parts.iter().find(|p| p.i == 0 && p.j == 0) {
        return Err(Error::InvalidPart { i: bad.i, j: bad.j });
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(TwoDimPartition::from_sorted_unchecked(parts))
}

/// `α_p = n! m! / (Π_parts i! j! · Π_{(k,l)} e_{p,k,l}!)` for `p ⊢ (n, m)`.
///
/// Evaluated as an exact rational; a fractional result is reported as an
/// invariant violation.
pub fn alpha2d(p: &TwoDimPartition) -> Result<Integer> {
    let mut denominator = Integer::one();
    for part in p.parts() {
        denominator *= factorial(part.i) * factorial(part.j);
    }
    for e in p.multiplicities().values() {
        denominator *= factorial(*e);
    }
    let numerator = factorial(p.x_sum()) * factorial(p.y_sum());
    let value = Rational::new(numerator, denominator);
    expect_integer(&value, format!("alpha of {p}"))
}

/// An ordinary partition of a positive integer, parts non-increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OneDimPartition {
    parts: Vec<u32>,
}

impl OneDimPartition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::EmptyPartition);
        }
        if parts.contains(&0) {
            return Err(Error::InvalidOneDimPart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(OneDimPartition { parts })
    }

    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        OneDimPartition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn size(&self) -> usize {
        self.parts.len()
    }

    /// `e_{p,k}`.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.parts.iter().filter(|&&p| p == k).count() as u32
    }

    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut table = BTreeMap::new();
        for &p in &self.parts {
            *table.entry(p).or_insert(0) += 1;
        }
        table
    }
}

impl fmt::Display for OneDimPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `α_p = n! / (Π p_i! · Π_k e_{p,k}!)`, the Faà di Bruno weight.
pub fn alpha1d(p: &OneDimPartition) -> Integer {
    let mut denominator = Integer::one();
    for &part in p.parts() {
        denominator *= factorial(part);
    }
    for e in p.multiplicities().values() {
        denominator *= factorial(*e);
    }
    // Always integral: it counts set partitions of block type p.
    factorial(p.sum()) / denominator
}
