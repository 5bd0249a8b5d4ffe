//! Immutable simple undirected graphs with bit-vector adjacency rows,
//! truncated distance matrices and twin classes.

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::VertexSet;
use crate::error::{input, Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Rows are symmetric and the diagonal is clear. Connectivity is not an
/// invariant: deletions may disconnect a graph and every distance routine
/// handles that case.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    label: Option<String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: (0..n).map(|_| VertexSet::new(n)).collect(), label: None }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return input("a graph needs at least one vertex");
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return input(format!("edge ({u},{v}) has an endpoint outside 0..{n}"));
            }
            if u == v {
                return input(format!("self-loop at vertex {u}"));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.adj[u].insert(v);
            self.adj[v].insert(u);
        } else {
            self.adj[u].remove(v);
            self.adj[v].remove(u);
        }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            out.extend(self.adj[u].iter().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for w in self.adj[u].iter() {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        self.bfs(0).iter().all(Option::is_some)
    }

    pub fn diameter(&self) -> Diameter {
        let mut best = 0;
        for s in 0..self.order() {
            for d in self.bfs(s) {
                match d {
                    Some(d) => best = best.max(d),
                    None => return Diameter::Infinite,
                }
            }
        }
        Diameter::Finite(best)
    }

    /// Distance matrix clamped at `k + 1`; unreachable pairs also read `k + 1`.
    pub fn truncated_metric(&self, k: u32) -> TruncatedMetric {
        TruncatedMetric::new(self, k)
    }

    /// Removes `v`; vertices above `v` shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        Ok(self.delete_vertex_with_map(v)?.0)
    }

    /// Like [`Graph::delete_vertex`], also returning the original label of
    /// every surviving vertex.
    pub fn delete_vertex_with_map(&self, v: usize) -> Result<(Graph, Vec<usize>)> {
        let n = self.order();
        if v >= n {
            return input(format!("vertex {v} out of range 0..{n}"));
        }
        if n == 1 {
            return input("cannot delete the only vertex");
        }
        let keep: Vec<usize> = (0..n).filter(|&u| u != v).collect();
        Ok((self.induced(&keep), keep))
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.order() || v >= self.order() || !self.has_edge(u, v) {
            return input(format!("edge ({u},{v}) is not present"));
        }
        let mut g = self.clone();
        g.set_edge(u, v, false);
        Ok(g)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.order();
        if u >= n || v >= n || u == v {
            return input(format!("cannot add edge ({u},{v}) on {n} vertices"));
        }
        let mut g = self.clone();
        g.set_edge(u, v, true);
        Ok(g)
    }

    /// Induced subgraph on `keep`, relabelled `0..keep.len()` in the given order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut g = Graph::empty(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &w) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, w) {
                    g.set_edge(i, j, true);
                }
            }
        }
        g
    }

    /// Disjoint union of `self` and `other`; `other`'s vertices are shifted up.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        let mut g = Graph::empty(n1 + other.order());
        for (u, v) in self.edges() {
            g.set_edge(u, v, true);
        }
        for (u, v) in other.edges() {
            g.set_edge(n1 + u, n1 + v, true);
        }
        g
    }

    /// The join `self + other`: disjoint union plus every cross edge.
    pub fn join(&self, other: &Graph) -> Graph {
        let n1 = self.order();
        let mut g = self.disjoint_union(other);
        for u in 0..n1 {
            for v in 0..other.order() {
                g.set_edge(u, n1 + v, true);
            }
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.set_edge(u, v, true);
                }
            }
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen[s] {
                continue;
            }
            let mut comp: Vec<usize> =
                self.bfs(s).iter().enumerate().filter(|(_, d)| d.is_some()).map(|(v, _)| v).collect();
            comp.sort_unstable();
            for &v in &comp {
                seen[v] = true;
            }
            out.push(comp);
        }
        out
    }

    /// `u` and `w` are twins when `N(u) - {w} = N(w) - {u}`.
    pub fn are_twins(&self, u: usize, w: usize) -> bool {
        if u == w {
            return false;
        }
        let mut a = self.adj[u].clone();
        let mut b = self.adj[w].clone();
        a.remove(w);
        b.remove(u);
        a == b
    }

    /// Classes of the twin relation, built as connected components of the
    /// pairwise relation. Classes are sorted and ordered by smallest member.
    pub fn twin_partition(&self) -> TwinPartition {
        let n = self.order();
        let mut class_of: Vec<Option<usize>> = vec![None; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for s in 0..n {
            if class_of[s].is_some() {
                continue;
            }
            let id = classes.len();
            class_of[s] = Some(id);
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for w in 0..n {
                    if class_of[w].is_none() && self.are_twins(u, w) {
                        class_of[w] = Some(id);
                        members.push(w);
                        stack.push(w);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        TwinPartition { classes }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        (0..n).all(|v| self.degree(v) == n - 1)
    }

    /// True when the graph is a path `P_n` (including `P_1`).
    pub fn is_path(&self) -> bool {
        let n = self.order();
        if n == 1 {
            return true;
        }
        self.size() == n - 1
            && self.is_connected()
            && (0..n).all(|v| self.degree(v) <= 2)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.order())
            .field("label", &self.label)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Matrix of `d_k(u, v) = min(d(u, v), k + 1)` for a fixed radius `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedMetric {
    k: u32,
    n: usize,
    d: Vec<u32>,
}

impl TruncatedMetric {
    fn new(g: &Graph, k: u32) -> Self {
        assert!(k >= 1, "radius must be positive");
        let n = g.order();
        let cap = k + 1;
        let mut d = vec![cap; n * n];
        let mut frontier = VertexSet::new(n);
        let mut next = VertexSet::new(n);
        let mut seen = VertexSet::new(n);
        for s in 0..n {
            frontier.clear();
            seen.clear();
            frontier.insert(s);
            seen.insert(s);
            d[s * n + s] = 0;
            let mut depth = 0;
            while depth < k && !frontier.is_empty() {
                depth += 1;
                next.clear();
                for u in frontier.iter() {
                    next.union_with(g.neighbors(u));
                }
                next.difference_with(&seen);
                for v in next.iter() {
                    d[s * n + v] = depth;
                }
                seen.union_with(&next);
                std::mem::swap(&mut frontier, &mut next);
            }
        }
        TruncatedMetric { k, n, d }
    }

    #[inline]
    pub fn k(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }
}

impl fmt::Debug for TruncatedMetric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "TruncatedMetric(k={})", self.k)?;
        for u in 0..self.n {
            writeln!(f, "  {:?}", self.row(u))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    pub classes: Vec<Vec<usize>>,
}

impl TwinPartition {
    /// Classes with at least two members.
    pub fn nontrivial(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.classes.iter().filter(|c| c.len() >= 2)
    }

    /// `sum(|C| - 1)`: every resolving set misses at most one vertex per class.
    pub fn excess(&self) -> usize {
        self.classes.iter().map(|c| c.len() - 1).sum()
    }
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::NotConnected)
    }
}
