//! Closed-form values of `dim_k` for paths, cycles, wheels, fans, complete
//! multipartite graphs and the Petersen graph, plus recognition of the graphs
//! whose `dim_k` is extreme.

use std::fmt;

use serde::Serialize;

use crate::error::{input, Result};
use crate::graph::{require_connected, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyValue {
    pub family: String,
    pub params: Vec<usize>,
    pub k: u32,
    pub value: usize,
    /// Which case of the closed form produced `value`.
    pub branch: String,
}

impl FamilyValue {
    fn new(family: &str, params: Vec<usize>, k: u32, value: usize, branch: impl Into<String>) -> Self {
        FamilyValue { family: family.to_string(), params, k, value, branch: branch.into() }
    }
}

fn check_k(k: u32) -> Result<usize> {
    if k == 0 {
        return input("radius k must be positive");
    }
    Ok(k as usize)
}

/// Shared large-`n` case of paths and cycles (`n >= 3k + 4`).
fn residue_branch(n: usize, k: usize) -> (usize, String) {
    let m = 3 * k + 2;
    let r = n % m;
    let lo = k + 3;
    let hi = (3 * k + 5).div_ceil(2) - 1;
    if (lo..=hi).contains(&r) {
        ((2 * n + 4 * k - 1) / m, format!("n mod {m} = {r} in [{lo},{hi}]"))
    } else {
        ((2 * n + 3 * k - 1) / m, format!("n mod {m} = {r} outside [{lo},{hi}]"))
    }
}

pub fn dim_k_path(n: usize, k: u32) -> Result<FamilyValue> {
    let kk = check_k(k)?;
    if n < 2 {
        return input("path needs n >= 2");
    }
    let (value, branch) = if n <= kk + 2 {
        (1, "n <= k+2".to_string())
    } else if n <= 3 * kk + 3 {
        (2, "k+3 <= n <= 3k+3".to_string())
    } else {
        residue_branch(n, kk)
    };
    Ok(FamilyValue::new("path", vec![n], k, value, branch))
}

pub fn dim_k_cycle(n: usize, k: u32) -> Result<FamilyValue> {
    let kk = check_k(k)?;
    if n < 3 {
        return input("cycle needs n >= 3");
    }
    let (value, branch) = if n <= 3 * kk + 3 { (2, "n <= 3k+3".to_string()) } else { residue_branch(n, kk) };
    Ok(FamilyValue::new("cycle", vec![n], k, value, branch))
}

/// Wheel `C_n + K_1`; independent of `k`.
pub fn dim_k_wheel(n: usize, k: u32) -> Result<FamilyValue> {
    check_k(k)?;
    if n < 3 {
        return input("wheel needs a rim of at least 3 vertices");
    }
    let (value, branch) = match n {
        3 | 6 => (3, "n in {3,6}"),
        _ => ((2 * n + 2) / 5, "floor((2n+2)/5)"),
    };
    Ok(FamilyValue::new("wheel", vec![n], k, value, branch))
}

/// Fan `P_n + K_1`; independent of `k`.
pub fn dim_k_fan(n: usize, k: u32) -> Result<FamilyValue> {
    check_k(k)?;
    if n < 1 {
        return input("fan needs n >= 1");
    }
    let (value, branch) = match n {
        1 => (1, "n = 1"),
        2 | 3 => (2, "n in {2,3}"),
        6 => (3, "n = 6"),
        _ => ((2 * n + 2) / 5, "floor((2n+2)/5)"),
    };
    Ok(FamilyValue::new("fan", vec![n], k, value, branch))
}

pub fn dim_k_multipartite(parts: &[usize], k: u32) -> Result<FamilyValue> {
    check_k(k)?;
    if parts.len() < 2 || parts.contains(&0) {
        return input("multipartite needs at least two nonempty parts");
    }
    let n: usize = parts.iter().sum();
    let m = parts.len();
    let s = parts.iter().filter(|&&p| p == 1).count();
    let (value, branch) = if s == 0 { (n - m, "no singleton parts") } else { (n - m + s - 1, "singleton parts") };
    Ok(FamilyValue::new("multipartite", parts.to_vec(), k, value, branch))
}

pub fn dim_k_complete(n: usize, k: u32) -> Result<FamilyValue> {
    check_k(k)?;
    if n < 2 {
        return input("complete graph needs n >= 2");
    }
    Ok(FamilyValue::new("complete", vec![n], k, n - 1, "n-1"))
}

pub fn dim_k_petersen(k: u32) -> Result<FamilyValue> {
    check_k(k)?;
    Ok(FamilyValue::new("petersen", vec![], k, 3, "constant"))
}

/// `dim_k(C_N + K_1) - dim_k(C_N)` for `N = 5(3k+2)x`, the wheel with its hub
/// deleted.
pub fn wheel_deletion_delta(k: u32, x: usize) -> Result<i64> {
    if k < 2 || x < 1 {
        return input("wheel deletion needs k >= 2 and x >= 1");
    }
    let rim = 5 * (3 * k as usize + 2) * x;
    Ok(dim_k_wheel(rim, k)?.value as i64 - dim_k_cycle(rim, k)?.value as i64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinFamily {
    /// `K_{s,t}`
    CompleteBipartite,
    /// `K_s + K̄_t` with `t >= 2`
    CliqueJoinIndependent,
    /// `K_s + (K_1 ∪ K_t)`
    CliqueJoinK1UnionClique,
    /// `P_4`, extreme only at `k = 1`
    P4Special,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExtremeClass {
    /// A path of the given order, at most `k + 2`.
    DimOne(usize),
    NMinusOne,
    NMinusTwo(JoinFamily),
    Other,
}

impl ExtremeClass {
    /// The `dim_k` value the class predicts for a graph of order `n`.
    pub fn predicted(self, n: usize) -> Option<usize> {
        match self {
            ExtremeClass::DimOne(_) => Some(1),
            ExtremeClass::NMinusOne => Some(n - 1),
            ExtremeClass::NMinusTwo(_) => Some(n - 2),
            ExtremeClass::Other => None,
        }
    }
}

impl fmt::Display for ExtremeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtremeClass::DimOne(n) => write!(f, "dim-one(P_{n})"),
            ExtremeClass::NMinusOne => write!(f, "n-minus-one"),
            ExtremeClass::NMinusTwo(j) => {
                let name = match j {
                    JoinFamily::CompleteBipartite => "K_s,t",
                    JoinFamily::CliqueJoinIndependent => "K_s+co-K_t",
                    JoinFamily::CliqueJoinK1UnionClique => "K_s+(K_1+K_t)",
                    JoinFamily::P4Special => "P_4",
                };
                write!(f, "n-minus-two({name})")
            }
            ExtremeClass::Other => write!(f, "other"),
        }
    }
}

fn all_cliques(g: &Graph, parts: &[Vec<usize>]) -> bool {
    parts.iter().all(|c| g.induced(c).is_complete())
}

fn join_family(g: &Graph) -> Option<JoinFamily> {
    let n = g.order();
    let co = g.complement();
    let co_parts = co.components();
    if co_parts.len() == 2 && all_cliques(&co, &co_parts) {
        return Some(JoinFamily::CompleteBipartite);
    }
    let universal: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 1).collect();
    if universal.is_empty() {
        return None;
    }
    let rest: Vec<usize> = (0..n).filter(|v| !universal.contains(v)).collect();
    if rest.len() < 2 {
        return None;
    }
    let sub = g.induced(&rest);
    if sub.size() == 0 {
        return Some(JoinFamily::CliqueJoinIndependent);
    }
    let comps = sub.components();
    if comps.len() == 2 && comps.iter().any(|c| c.len() == 1) && all_cliques(&sub, &comps) {
        return Some(JoinFamily::CliqueJoinK1UnionClique);
    }
    None
}

/// Structural class of `g` with respect to the extreme values 1, `n - 2` and
/// `n - 1` of `dim_k`.
pub fn classify_extreme(g: &Graph, k: u32) -> Result<ExtremeClass> {
    check_k(k)?;
    let n = g.order();
    if n < 2 {
        return input("classification needs n >= 2");
    }
    require_connected(g)?;
    if g.is_complete() {
        return Ok(ExtremeClass::NMinusOne);
    }
    if g.is_path() && n <= k as usize + 2 {
        return Ok(ExtremeClass::DimOne(n));
    }
    if n >= 4 {
        if let Some(j) = join_family(g) {
            return Ok(ExtremeClass::NMinusTwo(j));
        }
        if k == 1 && n == 4 && g.is_path() {
            return Ok(ExtremeClass::NMinusTwo(JoinFamily::P4Special));
        }
    }
    Ok(ExtremeClass::Other)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn path_values() {
        assert_eq!(dim_k_path(4, 2).unwrap().value, 1);
        assert_eq!(dim_k_path(10, 1).unwrap().value, 4);
        let v = dim_k_path(13, 2).unwrap();
        assert_eq!(v.value, 4);
        assert!(v.branch.contains("in [5,5]"), "{}", v.branch);
        assert_eq!(dim_k_path(7, 2).unwrap().value, 2);
    }

    #[test]
    fn cycle_values() {
        assert_eq!(dim_k_cycle(8, 2).unwrap().value, 2);
        assert_eq!(dim_k_cycle(10, 1).unwrap().value, 4);
        assert_eq!(dim_k_cycle(13, 2).unwrap().value, 4);
        assert_eq!(dim_k_cycle(12, 2).unwrap().value, 3);
    }

    #[test]
    fn middle_range_is_empty_for_k1() {
        for n in 4..60 {
            assert_eq!(dim_k_cycle(n, 1).unwrap().value, (2 * n + 2) / 5);
            assert_eq!(dim_k_path(n, 1).unwrap().value, (2 * n + 2) / 5);
            assert!(dim_k_cycle(n, 1).unwrap().branch.contains("outside") || n <= 6);
        }
    }

    #[test]
    fn joins_and_constants() {
        assert_eq!(dim_k_wheel(3, 1).unwrap().value, 3);
        assert_eq!(dim_k_wheel(6, 4).unwrap().value, 3);
        assert_eq!(dim_k_wheel(10, 2).unwrap().value, 4);
        assert_eq!(dim_k_fan(1, 1).unwrap().value, 1);
        assert_eq!(dim_k_fan(6, 1).unwrap().value, 3);
        assert_eq!(dim_k_fan(10, 1).unwrap().value, 4);
        assert_eq!(dim_k_multipartite(&[2, 3], 1).unwrap().value, 3);
        assert_eq!(dim_k_multipartite(&[1, 1, 1, 1, 1], 1).unwrap().value, 4);
        assert_eq!(dim_k_multipartite(&[1, 2, 2], 2).unwrap().value, 2);
        assert_eq!(dim_k_complete(2, 1).unwrap().value, 1);
        assert_eq!(dim_k_complete(7, 1).unwrap().value, 6);
        assert_eq!(dim_k_petersen(3).unwrap().value, 3);
        assert!(dim_k_multipartite(&[3], 1).is_err());
        assert!(dim_k_path(5, 0).is_err());
    }

    #[test]
    fn wheel_delta() {
        assert_eq!(wheel_deletion_delta(2, 1).unwrap(), 6);
        assert_eq!(wheel_deletion_delta(3, 1).unwrap(), 12);
        assert!(wheel_deletion_delta(1, 1).is_err());
    }

    #[test]
    fn classify_examples() {
        let p4 = path(4);
        assert_eq!(classify_extreme(&p4, 1).unwrap(), ExtremeClass::NMinusTwo(JoinFamily::P4Special));
        assert_eq!(classify_extreme(&p4, 2).unwrap(), ExtremeClass::DimOne(4));
        let k23 = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(classify_extreme(&k23, 3).unwrap(), ExtremeClass::NMinusTwo(JoinFamily::CompleteBipartite));
        // K_2 + (K_1 ∪ K_2)
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (3, 4)]).unwrap();
        assert_eq!(classify_extreme(&g, 2).unwrap(), ExtremeClass::NMinusTwo(JoinFamily::CliqueJoinK1UnionClique));
        // K_1 + co-K_3 is also K_{1,3}
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(classify_extreme(&star, 1).unwrap(), ExtremeClass::NMinusTwo(JoinFamily::CompleteBipartite));
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(classify_extreme(&c5, 1).unwrap(), ExtremeClass::Other);
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(classify_extreme(&split, 1).is_err());
    }
}
