//! Closed-form bounds on `dim_k` in terms of order, diameter and dimension.

use crate::graph::Graph;

/// `sum(|C| - 1)` over twin classes. Any resolving set, at any radius,
/// contains all but at most one vertex of each class.
pub fn twin_lower_bound(g: &Graph) -> usize {
    g.twin_partition().excess()
}

/// `n - min(d, k + 1)` for a connected graph of order `n` and diameter `d`.
pub fn diameter_upper_bound(n: usize, d: usize, k: u32) -> usize {
    n - d.min(k as usize + 1)
}

/// `n - (d + 1 - floor((2(d + 1) + 4k - 1) / (3k + 2)))`: a diametral path
/// `P_{d+1}` keeps a resolving set of that floor size and everything else is added.
pub fn refined_upper_bound(n: usize, d: usize, k: u32) -> usize {
    let k = k as usize;
    let path_part = (2 * (d + 1) + 4 * k - 1) / (3 * k + 2);
    n - (d + 1 - path_part)
}

fn checked_order(base: u128, beta: u32, terms: u128) -> u128 {
    // (base)^beta + beta * sum_{i=1}^{terms} (2i - 1)^(beta - 1), saturating.
    let head = base.checked_pow(beta).unwrap_or(u128::MAX);
    let mut tail: u128 = 0;
    for i in 1..=terms {
        let t = (2 * i - 1).checked_pow(beta - 1).unwrap_or(u128::MAX);
        tail = tail.saturating_add(t);
    }
    head.saturating_add(tail.saturating_mul(beta as u128))
}

/// Largest order of a connected graph with diameter `d` and metric dimension `beta`:
/// `(floor(2d/3) + 1)^beta + beta * sum_{i=1}^{ceil(d/3)} (2i - 1)^(beta - 1)`.
pub fn order_bound(d: u32, beta: u32) -> u128 {
    assert!(d >= 1 && beta >= 1);
    let d = d as u128;
    checked_order(2 * d / 3 + 1, beta, d.div_ceil(3))
}

/// Largest order of a graph with `dim_j = beta`; equals `order_bound(j + 1, beta)`.
pub fn max_order(j: u32, beta: u32) -> u128 {
    assert!(j >= 1 && beta >= 1);
    order_bound(j + 1, beta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diameter_bound_examples() {
        assert_eq!(diameter_upper_bound(10, 3, 1), 8);
        assert_eq!(diameter_upper_bound(10, 3, 5), 7);
        assert_eq!(diameter_upper_bound(6, 1, 4), 5);
    }

    #[test]
    fn refined_bound_examples() {
        assert_eq!(refined_upper_bound(20, 9, 1), 14);
        for k in 1..6 {
            assert_eq!(refined_upper_bound(7, 1, k), 6);
        }
    }

    #[test]
    fn max_order_examples() {
        for beta in 1..=6 {
            assert_eq!(max_order(1, beta), 2u128.pow(beta) + beta as u128);
            assert_eq!(max_order(2, beta), 3u128.pow(beta) + beta as u128);
        }
        assert_eq!(max_order(4, 1), 6);
        assert_eq!(order_bound(3, 1), 4);
    }

    #[test]
    fn max_order_saturates() {
        assert_eq!(max_order(200, 60), u128::MAX);
    }
}
