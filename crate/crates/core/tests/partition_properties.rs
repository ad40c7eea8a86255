mod common;

use std::collections::BTreeMap;

use implicit_deriv::math::{Integer, Rational};
use implicit_deriv::partition::{
    a_move, alpha1d, alpha2d, b_move, canonicalize, enumerate_1d, enumerate_2d,
    enumerate_formula_partitions, lemma_relations, remove_parts, LemmaCase,
};
use implicit_deriv::{OneDimPartition, Part, TwoDimPartition};
use num_traits::{One, Signed};
use proptest::prelude::*;

use common::{partitions_up_to, set_partitions};

fn part(i: u32, j: u32) -> Part {
    Part::new(i, j).unwrap()
}

fn alpha(p: &TwoDimPartition) -> Integer {
    alpha2d(p).unwrap()
}

fn int(v: u32) -> Integer {
    Integer::from(v)
}

fn sign(size: usize) -> Integer {
    if size.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Counts set partitions of `n` "x" elements and `m` "y" elements by the
/// multiset of (x count, y count) over their blocks.
fn block_type_tally(n: u32, m: u32) -> BTreeMap<TwoDimPartition, u64> {
    let total = (n + m) as usize;
    let mut tally = BTreeMap::new();
    for labels in set_partitions(total) {
        let blocks = labels.iter().max().map_or(0, |b| b + 1);
        let mut counts = vec![(0u32, 0u32); blocks];
        for (k, &b) in labels.iter().enumerate() {
            if k < n as usize {
                counts[b].0 += 1;
            } else {
                counts[b].1 += 1;
            }
        }
        let p = canonicalize(counts.into_iter().map(|(i, j)| part(i, j))).unwrap();
        *tally.entry(p).or_insert(0) += 1;
    }
    tally
}

#[test]
fn alpha_counts_labelled_block_structures() {
    for n in 0..=5u32 {
        for m in 0..=(8 - n).min(5) {
            if n + m == 0 {
                continue;
            }
            let tally = block_type_tally(n, m);
            let all = enumerate_2d(n, m).unwrap();
            assert_eq!(tally.len(), all.len(), "(n,m)=({n},{m})");
            for p in all {
                assert_eq!(alpha(&p), Integer::from(tally[&p]), "{p}");
            }
        }
    }
}

#[test]
fn alpha1d_counts_set_partitions_by_block_sizes() {
    for n in 1..=8u32 {
        let mut tally: BTreeMap<OneDimPartition, u64> = BTreeMap::new();
        for labels in set_partitions(n as usize) {
            let blocks = labels.iter().max().unwrap() + 1;
            let mut sizes = vec![0u32; blocks];
            for &b in &labels {
                sizes[b] += 1;
            }
            *tally.entry(OneDimPartition::new(sizes).unwrap()).or_insert(0) += 1;
        }
        let all = enumerate_1d(n).unwrap();
        assert_eq!(all.len(), tally.len());
        for p in all {
            assert_eq!(alpha1d(&p), Integer::from(tally[&p]), "{p}");
        }
    }
}

#[test]
fn worked_partition_alpha() {
    let p = TwoDimPartition::from_pairs(&[(1, 1), (1, 1), (1, 1), (1, 0), (1, 0), (0, 2)]).unwrap();
    assert_eq!((p.x_sum(), p.y_sum(), p.size()), (5, 5, 6));
    assert_eq!(alpha(&p), Integer::from(600));
    assert_eq!(block_type_tally(5, 5)[&p], 600);
}

#[test]
fn alpha_is_integral_through_order_twelve() {
    for n in 1..=12 {
        for p in enumerate_formula_partitions(n).unwrap() {
            let a = alpha2d(&p).unwrap_or_else(|e| panic!("{p}: {e}"));
            assert!(a.is_positive(), "{p}");
        }
    }
}

#[test]
fn formula_partition_size_is_at_most_2n_minus_1() {
    for n in 1..=9u32 {
        let parts = enumerate_formula_partitions(n).unwrap();
        let widest = parts.iter().map(TwoDimPartition::size).max().unwrap();
        assert_eq!(widest, (2 * n - 1) as usize);
        let mut pairs = vec![(1, 0); n as usize];
        pairs.extend(std::iter::repeat_n((0, 2), n as usize - 1));
        let extreme = TwoDimPartition::from_pairs(&pairs).unwrap();
        assert!(parts.contains(&extreme));
        for p in &parts {
            assert!(p.is_formula_partition(n));
        }
    }
}

#[test]
fn alpha_ratio_identities() {
    for p in partitions_up_to(10) {
        let (n, m) = (p.x_sum(), p.y_sum());
        let ap = alpha(&p);
        for (&pt, &e) in &p.multiplicities() {
            let (i, j) = pt.pair();
            if let Ok(q) = a_move(&p, i, j) {
                assert_eq!(q.x_sum(), n - 1);
                let lhs = alpha(&q) * int(n) * int(p.multiplicity(i - 1, j) + 1);
                assert_eq!(lhs, int(i) * int(e) * &ap, "A_{{{i},{j}}}({p})");
            }
            if let Ok(q) = b_move(&p, i, j) {
                assert_eq!(q.y_sum(), m - 1);
                let lhs = alpha(&q) * int(m) * int(p.multiplicity(i, j - 1) + 1);
                assert_eq!(lhs, int(j) * int(e) * &ap, "B_{{{i},{j}}}({p})");
            }
        }
    }
}

#[test]
fn removal_and_composite_identities() {
    let (x, xy, yy) = (part(1, 0), part(1, 1), part(0, 2));
    let mut composite_checked = 0;
    for p in partitions_up_to(10) {
        let (n, m) = (p.x_sum(), p.y_sum());
        let ap = alpha(&p);
        let e = |i, j| int(p.multiplicity(i, j));
        if let Ok(q) = remove_parts(&p, &[x]) {
            assert_eq!(alpha(&q) * int(n), e(1, 0) * &ap, "{p}");
            for (&pt, &eq) in &q.multiplicities() {
                let (i, j) = pt.pair();
                if let Ok(r) = b_move(&q, i, j) {
                    assert_eq!(eq, p.multiplicity(i, j));
                    let lhs = alpha(&r) * int(m) * int(n) * int(q.multiplicity(i, j - 1) + 1);
                    assert_eq!(lhs, int(j) * e(i, j) * e(1, 0) * &ap, "{p} -> {r}");
                    composite_checked += 1;
                }
            }
        }
        if let Ok(q) = remove_parts(&p, &[xy]) {
            assert_eq!(alpha(&q) * int(n) * int(m), e(1, 1) * &ap, "{p}");
        }
        if let Ok(q) = remove_parts(&p, &[x, yy]) {
            let lhs = alpha(&q) * int(n) * int(m) * int(m - 1);
            assert_eq!(lhs, int(2) * e(1, 0) * e(0, 2) * &ap, "{p}");
        }
    }
    assert!(composite_checked > 1000);
}

fn is_excepted(case: LemmaCase) -> bool {
    matches!(
        case,
        LemmaCase::AMove { i: 1, j: 1 } | LemmaCase::BMoveAfterRemoveX { i: 0, j: 2 }
    )
}

#[test]
fn lemma_parts_one_to_three() {
    let fy = |p: &TwoDimPartition| p.contains(0, 1);
    let mut seen = [0usize; 4];
    let mut exceptions = 0;
    for p in partitions_up_to(10) {
        let (n, m) = (p.x_sum(), p.y_sum());
        for rel in lemma_relations(&p) {
            let q = &rel.q;
            seen[rel.case.number() as usize - 1] += 1;
            // Part (1): sizes and sums.
            let (dsize, dm) = match rel.case {
                LemmaCase::RemoveMixed => (1, 1),
                LemmaCase::AMove { .. } => (0, 0),
                LemmaCase::RemoveXAndYy => (2, 2),
                LemmaCase::BMoveAfterRemoveX { .. } => (1, 1),
            };
            assert_eq!(p.size(), q.size() + dsize, "{p} / {q}");
            assert_eq!((q.x_sum(), q.y_sum() + dm), (n - 1, m), "{p} / {q}");
            // Part (2).
            assert_eq!(
                m as usize + 1 == p.size(),
                q.y_sum() as usize + 1 == q.size(),
                "{p} / {q}"
            );
            // Part (3).
            if !fy(q) {
                assert!(!fy(&p), "{p} / {q}");
            }
            if !fy(&p) && fy(q) {
                assert!(is_excepted(rel.case), "{p} / {q} via {:?}", rel.case);
            }
            if is_excepted(rel.case) {
                assert!(fy(q), "{p} / {q}");
                exceptions += 1;
            }
        }
    }
    assert!(seen.iter().all(|&c| c > 0), "{seen:?}");
    assert!(exceptions > 0);
}

#[test]
fn lemma_part_four() {
    for p in partitions_up_to(10) {
        let (n, m) = (p.x_sum(), p.y_sum());
        let ap = Rational::from(alpha(&p));
        let e = |i, j| Rational::from(int(p.multiplicity(i, j)));
        let r = |v: u32| Rational::from(int(v));
        for rel in lemma_relations(&p) {
            let expected = match rel.case {
                LemmaCase::RemoveMixed => e(1, 1) / (r(n) * r(m)),
                LemmaCase::AMove { i, j } => r(i) * e(i, j) / (r(n) * (e(i - 1, j) + r(1))),
                LemmaCase::RemoveXAndYy => r(2) * e(1, 0) * e(0, 2) / (r(n) * r(m) * r(m - 1)),
                LemmaCase::BMoveAfterRemoveX { i, j } => {
                    let without_x = remove_parts(&p, &[part(1, 0)]).unwrap();
                    let below = r(without_x.multiplicity(i, j - 1) + 1);
                    r(j) * e(i, j) * e(1, 0) / (r(n) * r(m) * below)
                }
            };
            assert_eq!(Rational::from(alpha(&rel.q)), expected * &ap, "{p} via {:?}", rel.case);
        }
    }
}

/// Rebuilds each coefficient from the order below by summing the
/// contributions of the four relations, and checks it is `(-1)^|p| α_p`.
#[test]
fn coefficients_satisfy_the_induction_recurrence() {
    for n in 2..=8 {
        for p in enumerate_formula_partitions(n).unwrap() {
            let mut t = Integer::from(0);
            for rel in lemma_relations(&p) {
                let q = &rel.q;
                if !q.is_formula_partition(n - 1) {
                    continue;
                }
                assert!(!is_excepted(rel.case));
                let base = sign(q.size()) * alpha(q);
                let contribution = match rel.case {
                    LemmaCase::RemoveMixed => -(base * q.size()),
                    LemmaCase::AMove { i, j } => base * (p.multiplicity(i - 1, j) + 1),
                    LemmaCase::RemoveXAndYy => base * q.size(),
                    LemmaCase::BMoveAfterRemoveX { i, j } => {
                        let without_x = remove_parts(&p, &[part(1, 0)]).unwrap();
                        -(base * (without_x.multiplicity(i, j - 1) + 1))
                    }
                };
                t += contribution;
            }
            assert_eq!(t, sign(p.size()) * alpha(&p), "{p}");
        }
    }
}

fn arb_parts() -> impl Strategy<Value = Vec<(u32, u32)>> {
    prop::collection::vec((0u32..4, 0u32..4), 1..8)
        .prop_filter("no (0,0)", |v| v.iter().all(|&(i, j)| (i, j) != (0, 0)))
}

proptest! {
    #[test]
    fn canonicalize_is_idempotent_and_order_free(pairs in arb_parts(), seed in any::<u64>()) {
        let parts: Vec<Part> = pairs.iter().map(|&(i, j)| part(i, j)).collect();
        let p = canonicalize(parts.clone()).unwrap();
        prop_assert_eq!(canonicalize(p.parts().to_vec()).unwrap(), p.clone());
        let mut rotated = parts;
        let k = (seed as usize) % rotated.len();
        rotated.rotate_left(k);
        rotated.reverse();
        prop_assert_eq!(canonicalize(rotated).unwrap(), p.clone());
        prop_assert!(p.parts().windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(p.x_sum(), pairs.iter().map(|x| x.0).sum::<u32>());
        prop_assert_eq!(p.y_sum(), pairs.iter().map(|x| x.1).sum::<u32>());
    }

    #[test]
    fn alpha_is_invariant_under_reordering(pairs in arb_parts()) {
        let mut rev = pairs.clone();
        rev.reverse();
        let a = TwoDimPartition::from_pairs(&pairs).unwrap();
        let b = TwoDimPartition::from_pairs(&rev).unwrap();
        prop_assert_eq!(alpha(&a), alpha(&b));
    }
}
