#![allow(dead_code)]

use implicit_deriv::partition::enumerate_2d;
use implicit_deriv::TwoDimPartition;

/// Every set partition of `{0, ..., n-1}` as a restricted growth string:
/// `labels[k]` is the block of element `k`, and each block number first
/// appears in increasing order.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, max: usize, labels: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == n {
            out.push(labels.clone());
            return;
        }
        for b in 0..=max {
            labels.push(b);
            go(k + 1, n, if b == max { max + 1 } else { max }, labels, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, 0, &mut Vec::new(), &mut out);
    out
}

pub fn bell(n: usize) -> usize {
    set_partitions(n).len()
}

/// All `p ⊢ (n, m)` with `1 <= n + m <= total`.
pub fn partitions_up_to(total: u32) -> Vec<TwoDimPartition> {
    let mut out = Vec::new();
    for n in 0..=total {
        for m in 0..=total - n {
            if n + m > 0 {
                out.extend(enumerate_2d(n, m).unwrap());
            }
        }
    }
    out
}
