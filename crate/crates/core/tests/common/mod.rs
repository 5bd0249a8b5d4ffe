//! Brute-force reference implementations that share no code with the
//! solver: plain BFS on adjacency lists and exhaustive subset search.
#![allow(dead_code)]

use std::collections::HashSet;

use kdim::Graph;
use proptest::prelude::*;

pub fn adjacency(g: &Graph) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); g.order()];
    for (u, v) in g.edges() {
        adj[u].push(v);
        adj[v].push(u);
    }
    adj
}

/// All-pairs distances, `None` when unreachable.
pub fn distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    let adj = adjacency(g);
    let n = g.order();
    (0..n)
        .map(|s| {
            let mut d = vec![None; n];
            d[s] = Some(0);
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if d[w].is_none() {
                        d[w] = Some(d[u].unwrap() + 1);
                        queue.push_back(w);
                    }
                }
            }
            d
        })
        .collect()
}

pub fn truncate(d: Option<usize>, k: u32) -> usize {
    d.map_or(k as usize + 1, |x| x.min(k as usize + 1))
}

pub fn resolves(dist: &[Vec<Option<usize>>], s: &[usize], k: u32) -> bool {
    let mut seen = HashSet::new();
    (0..dist.len()).all(|v| seen.insert(s.iter().map(|&x| truncate(dist[v][x], k)).collect::<Vec<_>>()))
}

/// Pairs `(x, y)`, `x < y`, with equal codes against `s`.
pub fn unresolved_pairs(dist: &[Vec<Option<usize>>], s: &[usize], k: u32) -> Vec<(usize, usize)> {
    let n = dist.len();
    let code = |v: usize| s.iter().map(|&x| truncate(dist[v][x], k)).collect::<Vec<_>>();
    let mut out = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if code(x) == code(y) {
                out.push((x, y));
            }
        }
    }
    out
}

/// Lexicographic `r`-subsets of `0..n`.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < r - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, r, &mut Vec::new(), &mut out);
    out
}

/// Every minimum distance-`k` resolving set, in lexicographic order.
pub fn brute_all_minimum(g: &Graph, k: u32) -> Vec<Vec<usize>> {
    let dist = distances(g);
    for r in 1..=g.order() {
        let found: Vec<_> = combinations(g.order(), r).into_iter().filter(|s| resolves(&dist, s, k)).collect();
        if !found.is_empty() {
            return found;
        }
    }
    unreachable!("the full vertex set always resolves")
}

pub fn brute_dim_k(g: &Graph, k: u32) -> usize {
    let dist = distances(g);
    (1..=g.order())
        .find(|&r| combinations(g.order(), r).iter().any(|s| resolves(&dist, s, k)))
        .expect("the full vertex set always resolves")
}

pub fn diameter(g: &Graph) -> Option<usize> {
    let d = distances(g);
    let mut best = 0;
    for row in &d {
        for x in row {
            best = best.max((*x)?);
        }
    }
    Some(best)
}

pub fn is_connected(g: &Graph) -> bool {
    distances(g)[0].iter().all(Option::is_some)
}

/// Connected graph from a spanning tree given by parent choices plus extra
/// edges from `mask`.
pub fn graph_from_choices(n: usize, parents: &[usize], mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((parents[v - 1] % v, v));
    }
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask.get(i).copied().unwrap_or(false) {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected graph of order in `lo..=hi`.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        (
            Just(n),
            proptest::collection::vec(0..n.max(1), n.saturating_sub(1)),
            proptest::collection::vec(proptest::bool::weighted(0.3), n * (n - 1) / 2),
        )
            .prop_map(|(n, p, m)| graph_from_choices(n, &p, &m))
    })
}

/// Random graph of order in `lo..=hi`, possibly disconnected.
pub fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[i] {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}
