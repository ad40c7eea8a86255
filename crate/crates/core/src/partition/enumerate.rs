use super::{OneDimPartition, Part, TwoDimPartition};
use crate::error::{Error, Result};

/// All partitions `p ⊢ (n, |p| − 1)` without a `(0,1)` part, in descending
/// lexicographic order of their part sequences.
///
/// The constraint `y-sum = |p| − 1` is tracked as the running balance
/// `Σ (j − 1)`, which must finish at `−1`. Parts with `i ≥ 1` come first in
/// canonical order; each can lower the balance by at most one per unit of
/// x-sum, while the trailing `(0, j)` parts (`j ≥ 2`) can only raise it. That
/// gives the pruning bound `balance − remaining_x ≤ −1` at every step.
pub fn enumerate_formula_partitions(n: u32) -> Result<Vec<TwoDimPartition>> {
    if n == 0 {
        return Err(Error::ZeroOrder(n));
    }
    let mut out = Vec::new();
    let mut stack = Vec::with_capacity(2 * n as usize);
    descend_formula(Part::new_unchecked(n, u32::MAX), n, 0, &mut stack, &mut out);
    Ok(out)
}

fn descend_formula(
    bound: Part,
    remaining_x: u32,
    balance: i64,
    stack: &mut Vec<Part>,
    out: &mut Vec<TwoDimPartition>,
) {
    if remaining_x == 0 {
        if balance == -1 {
            out.push(TwoDimPartition::from_sorted_unchecked(stack.clone()));
            return;
        }
        // Only (0, j) parts with j >= 2 remain; each raises the balance by j - 1.
        let need = -1 - balance;
        if need < 1 {
            return;
        }
        let mut j_max = (need + 1) as u32;
        if bound.i == 0 {
            j_max = j_max.min(bound.j);
        }
        for j in (2..=j_max).rev() {
            stack.push(Part::new_unchecked(0, j));
            descend_formula(Part::new_unchecked(0, j), 0, balance + j as i64 - 1, stack, out);
            stack.pop();
        }
        return;
    }

    for i in (1..=bound.i.min(remaining_x)).rev() {
        let cap = remaining_x as i64 - i as i64 - balance;
        if cap < 0 {
            continue;
        }
        let mut j_max = cap.min(u32::MAX as i64) as u32;
        if i == bound.i {
            j_max = j_max.min(bound.j);
        }
        for j in (0..=j_max).rev() {
            let part = Part::new_unchecked(i, j);
            stack.push(part);
            descend_formula(part, remaining_x - i, balance + j as i64 - 1, stack, out);
            stack.pop();
        }
    }
}

/// Every partition `p ⊢ (n, m)`, in descending lexicographic order.
pub fn enumerate_2d(n: u32, m: u32) -> Result<Vec<TwoDimPartition>> {
    if n == 0 && m == 0 {
        return Err(Error::EmptyPartition);
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend_free(Part::new_unchecked(n, m), n, m, &mut stack, &mut out);
    Ok(out)
}

fn descend_free(
    bound: Part,
    remaining_x: u32,
    remaining_y: u32,
    stack: &mut Vec<Part>,
    out: &mut Vec<TwoDimPartition>,
) {
    if remaining_x == 0 && remaining_y == 0 {
        out.push(TwoDimPartition::from_sorted_unchecked(stack.clone()));
        return;
    }
    // Once the bound reaches i = 0, no more x-sum can be placed.
    if remaining_x > 0 && bound.i == 0 {
        return;
    }
    for i in (0..=bound.i.min(remaining_x)).rev() {
        let mut j_max = remaining_y;
        if i == bound.i {
            j_max = j_max.min(bound.j);
        }
        for j in (0..=j_max).rev() {
            if i == 0 && j == 0 {
                continue;
            }
            let part = Part::new_unchecked(i, j);
            stack.push(part);
            descend_free(part, remaining_x - i, remaining_y - j, stack, out);
            stack.pop();
        }
    }
}

/// All partitions of `n`, largest parts first.
pub fn enumerate_1d(n: u32) -> Result<Vec<OneDimPartition>> {
    if n == 0 {
        return Err(Error::ZeroOrder(n));
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend_1d(n, n, &mut stack, &mut out);
    Ok(out)
}

fn descend_1d(remaining: u32, bound: u32, stack: &mut Vec<u32>, out: &mut Vec<OneDimPartition>) {
    if remaining == 0 {
        out.push(OneDimPartition::from_sorted_unchecked(stack.clone()));
        return;
    }
    for k in (1..=bound.min(remaining)).rev() {
        stack.push(k);
        descend_1d(remaining - k, k, stack, out);
        stack.pop();
    }
}
