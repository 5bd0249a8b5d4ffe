mod common;

use kdim::enumerate::enumerate_connected;
use kdim::families::{complete_multipartite, cycle, fan, path, petersen, wheel};
use kdim::formulas::{
    classify_extreme, dim_k_cycle, dim_k_fan, dim_k_multipartite, dim_k_path, dim_k_petersen, dim_k_wheel,
    ExtremeClass, JoinFamily,
};
use proptest::prelude::*;

#[test]
fn path_and_cycle_formulas_match_brute_force() {
    for k in 1..=3 {
        for n in 2..=12 {
            assert_eq!(dim_k_path(n, k).unwrap().value, common::brute_dim_k(&path(n).unwrap(), k), "P_{n} k={k}");
        }
        for n in 3..=12 {
            assert_eq!(dim_k_cycle(n, k).unwrap().value, common::brute_dim_k(&cycle(n).unwrap(), k), "C_{n} k={k}");
        }
    }
}

#[test]
fn join_formulas_match_brute_force() {
    for k in 1..=2 {
        for n in 3..=9 {
            assert_eq!(dim_k_wheel(n, k).unwrap().value, common::brute_dim_k(&wheel(n).unwrap(), k), "wheel {n}");
        }
        for n in 1..=9 {
            assert_eq!(dim_k_fan(n, k).unwrap().value, common::brute_dim_k(&fan(n).unwrap(), k), "fan {n}");
        }
    }
}

#[test]
fn multipartite_and_petersen_match_brute_force() {
    for parts in [vec![2, 3], vec![1, 1, 1, 1, 1], vec![1, 2, 2], vec![1, 1, 3], vec![3, 3], vec![1, 4]] {
        let g = complete_multipartite(&parts).unwrap();
        assert_eq!(dim_k_multipartite(&parts, 1).unwrap().value, common::brute_dim_k(&g, 1), "{parts:?}");
    }
    assert_eq!(dim_k_petersen(2).unwrap().value, common::brute_dim_k(&petersen(), 2));
}

#[test]
fn classification_matches_brute_force_on_small_graphs() {
    for n in 4..=6 {
        for g in enumerate_connected(n).unwrap() {
            for k in 1..=3 {
                let class = classify_extreme(&g, k).unwrap();
                let dim = common::brute_dim_k(&g, k);
                match class.predicted(n) {
                    Some(p) => assert_eq!(p, dim, "{class} {:?} k={k}", g.edges()),
                    None => assert!(dim != 1 && dim != n - 2 && dim != n - 1, "{:?} k={k} dim={dim}", g.edges()),
                }
            }
        }
    }
}

#[test]
fn classification_examples() {
    let p4 = path(4).unwrap();
    assert_eq!(classify_extreme(&p4, 1).unwrap(), ExtremeClass::NMinusTwo(JoinFamily::P4Special));
    assert_eq!(classify_extreme(&p4, 2).unwrap(), ExtremeClass::DimOne(4));
    let k23 = complete_multipartite(&[2, 3]).unwrap();
    assert_eq!(classify_extreme(&k23, 3).unwrap(), ExtremeClass::NMinusTwo(JoinFamily::CompleteBipartite));
    let k2_co3 = complete_multipartite(&[1, 1, 3]).unwrap();
    assert_eq!(classify_extreme(&k2_co3, 2).unwrap(), ExtremeClass::NMinusTwo(JoinFamily::CliqueJoinIndependent));
}

proptest! {
    #[test]
    fn k1_specialization(n in 4usize..200) {
        prop_assert_eq!(dim_k_path(n, 1).unwrap().value, (2 * n + 2) / 5);
        prop_assert_eq!(dim_k_cycle(n, 1).unwrap().value, (2 * n + 2) / 5);
    }

    #[test]
    fn wheel_and_fan_ignore_k(n in 3usize..200, k in 1u32..10) {
        prop_assert_eq!(dim_k_wheel(n, k).unwrap().value, dim_k_wheel(n, 1).unwrap().value);
        prop_assert_eq!(dim_k_fan(n, k).unwrap().value, dim_k_fan(n, 1).unwrap().value);
    }

    #[test]
    fn values_lie_between_one_and_order(n in 3usize..300, k in 1u32..8) {
        for v in [dim_k_path(n, k).unwrap().value, dim_k_cycle(n, k).unwrap().value] {
            prop_assert!(v >= 1 && v < n);
        }
    }

    #[test]
    fn path_never_exceeds_cycle_above_threshold(k in 1u32..6, extra in 0usize..100) {
        let n = 3 * k as usize + 4 + extra;
        prop_assert_eq!(dim_k_path(n, k).unwrap().value, dim_k_cycle(n, k).unwrap().value);
    }
}
