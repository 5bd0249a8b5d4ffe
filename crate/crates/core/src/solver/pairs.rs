//! Distinguishing sets `R_k{x,y}` and the resolving-set predicate.

use std::collections::HashMap;

use crate::bitset::VertexSet;
use crate::graph::{Graph, TruncatedMetric};

/// One unordered pair `x < y` and the vertices whose truncated distances to
/// `x` and `y` differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairEntry {
    pub x: usize,
    pub y: usize,
    pub distinguishers: VertexSet,
}

/// Hitting-set instance: a set `S` resolves the graph at radius `k` iff it
/// meets every `distinguishers` set.
#[derive(Debug, Clone)]
pub struct PairSystem {
    pub k: u32,
    pub n: usize,
    /// All `n(n-1)/2` pairs, ordered lexicographically.
    pub pairs: Vec<PairEntry>,
    /// Twin classes with the number of their members any solution must contain.
    pub forced: Vec<(Vec<usize>, usize)>,
    /// First pair with an empty distinguishing set, if any.
    pub infeasible: Option<(usize, usize)>,
}

impl PairSystem {
    pub fn build(g: &Graph, k: u32) -> PairSystem {
        Self::from_metric(g, &g.truncated_metric(k))
    }

    pub(crate) fn from_metric(g: &Graph, m: &TruncatedMetric) -> PairSystem {
        let n = g.order();
        let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut infeasible = None;
        for x in 0..n {
            let rx = m.row(x);
            for y in x + 1..n {
                let ry = m.row(y);
                let r = VertexSet::from_vertices(n, (0..n).filter(|&z| rx[z] != ry[z]));
                if r.is_empty() && infeasible.is_none() {
                    infeasible = Some((x, y));
                }
                pairs.push(PairEntry { x, y, distinguishers: r });
            }
        }
        let forced = g
            .twin_partition()
            .nontrivial()
            .map(|c| (c.clone(), c.len() - 1))
            .collect();
        PairSystem { k: m.k(), n, pairs, forced, infeasible }
    }

    pub fn get(&self, x: usize, y: usize) -> Option<&PairEntry> {
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        if x == y || y >= self.n {
            return None;
        }
        // Row-major index into the strict upper triangle.
        let idx = x * (2 * self.n - x - 1) / 2 + (y - x - 1);
        self.pairs.get(idx)
    }

    /// First pair (lexicographically) that `set` fails to hit.
    pub fn first_unhit(&self, set: &VertexSet) -> Option<(usize, usize)> {
        self.pairs.iter().find(|p| !p.distinguishers.intersects(set)).map(|p| (p.x, p.y))
    }

    pub fn is_hit_by(&self, set: &VertexSet) -> bool {
        self.first_unhit(set).is_none()
    }
}

/// `(d_k(v, s_1), ..., d_k(v, s_m))` for the ordered landmark list `s`.
pub fn code_vector(g: &Graph, s: &[usize], v: usize, k: u32) -> Vec<u32> {
    let cap = k as usize + 1;
    let dist = g.bfs(v);
    s.iter().map(|&u| dist[u].map_or(cap, |d| d.min(cap)) as u32).collect()
}

/// Lexicographically smallest pair `x < y` with equal codes with respect to `s`,
/// or `None` when `s` is a distance-`k` resolving set.
pub fn unresolved_pair(g: &Graph, s: &[usize], k: u32) -> Option<(usize, usize)> {
    let n = g.order();
    let cap = k as usize + 1;
    let columns: Vec<Vec<u32>> = s
        .iter()
        .map(|&u| g.bfs(u).into_iter().map(|d| d.map_or(cap, |d| d.min(cap)) as u32).collect())
        .collect();
    let mut first_with_code: HashMap<Vec<u32>, usize> = HashMap::with_capacity(n);
    let mut best: Option<(usize, usize)> = None;
    for v in 0..n {
        let code: Vec<u32> = columns.iter().map(|c| c[v]).collect();
        match first_with_code.get(&code) {
            // Vertices arrive in increasing order, so (owner, v) is the
            // smallest pair for this code once v is its second member.
            Some(&owner) => {
                if best.is_none_or(|b| (owner, v) < b) {
                    best = Some((owner, v));
                }
            }
            None => {
                first_with_code.insert(code, v);
            }
        }
    }
    best
}

pub fn is_resolving(g: &Graph, s: &[usize], k: u32) -> bool {
    unresolved_pair(g, s, k).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn pair_sets_on_small_graphs() {
        let ps = PairSystem::build(&path(3), 1);
        assert_eq!(ps.get(0, 2).unwrap().distinguishers.to_vec(), vec![0, 2]);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let ps = PairSystem::build(&k2, 5);
        assert_eq!(ps.get(1, 0).unwrap().distinguishers.to_vec(), vec![0, 1]);
        assert!(ps.get(1, 1).is_none());
    }

    #[test]
    fn twins_are_distinguished_only_by_themselves() {
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let ps = PairSystem::build(&star, 2);
        assert_eq!(ps.get(1, 3).unwrap().distinguishers.to_vec(), vec![1, 3]);
        assert_eq!(ps.forced, vec![(vec![1, 2, 3], 2)]);
        assert!(ps.infeasible.is_none());
    }

    #[test]
    fn code_vectors() {
        let k3 = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        for k in 1..4 {
            assert_eq!(code_vector(&k3, &[0, 1], 2, k), vec![1, 1]);
        }
        assert_eq!(code_vector(&path(4), &[0], 3, 1), vec![2]);
        assert_eq!(code_vector(&path(4), &[0], 3, 2), vec![3]);
    }

    #[test]
    fn unresolved_pair_is_lexicographically_first() {
        let p7 = path(7);
        // Codes w.r.t. {3} at k = 1: 2,2,1,0,1,2,2.
        assert_eq!(unresolved_pair(&p7, &[3], 1), Some((0, 1)));
        assert!(!is_resolving(&p7, &[3], 1));
        assert!(is_resolving(&p7, &[0], 6));
        let all: Vec<usize> = (0..7).collect();
        assert!(is_resolving(&p7, &all, 1));
    }
}
