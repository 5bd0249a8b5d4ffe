//! Exact and bounded computation of `dim_k(G)` with certificates.

mod bounds;
mod pairs;
mod search;

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

pub use bounds::{diameter_upper_bound, max_order, order_bound, refined_upper_bound, twin_lower_bound};
pub use pairs::{code_vector, is_resolving, unresolved_pair, PairEntry, PairSystem};

use crate::bitset::VertexSet;
use crate::error::{input, Error, Result};
use crate::graph::{require_connected, Diameter, Graph};
use search::{BranchAndBound, HittingSetInstance, LexSearch};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Optimality proven by exhausted search.
    Exact,
    /// Set taken from a closed-form construction and verified.
    Formula,
    /// Search budget ran out; `dim` is only an upper bound.
    GreedyUpper,
    /// No search was run; `dim` is the greedy upper bound.
    BoundOnly,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Formula => "formula",
            Method::GreedyUpper => "greedy-upper",
            Method::BoundOnly => "bound-only",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateBounds {
    pub twin: usize,
    /// `n - min(d, k + 1)`; absent for disconnected graphs.
    pub diameter: Option<usize>,
    pub refined: Option<usize>,
}

/// A distance-`k` resolving set with enough data to re-check it.
#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub n: usize,
    pub k: u32,
    pub dim: usize,
    pub set: Vec<usize>,
    pub method: Method,
    pub elapsed_ms: u64,
    pub bounds: CertificateBounds,
    /// For every pair, the smallest vertex of `set` that distinguishes it.
    #[serde(skip)]
    pub witnesses: BTreeMap<(usize, usize), usize>,
    #[serde(skip)]
    pub nodes: u64,
}

impl Certificate {
    /// Same outcome, ignoring timing and search statistics.
    pub fn same_outcome(&self, other: &Certificate) -> bool {
        self.n == other.n
            && self.k == other.k
            && self.dim == other.dim
            && self.set == other.set
            && self.method == other.method
            && self.bounds == other.bounds
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    /// Wraps an externally constructed set, verifying that it resolves.
    pub fn from_construction(g: &Graph, k: u32, set: &[usize]) -> Result<Certificate> {
        let start = Instant::now();
        let ps = PairSystem::build(g, k);
        let vs = VertexSet::from_vertices(g.order(), set.iter().copied());
        if let Some((x, y)) = ps.first_unhit(&vs) {
            return input(format!("constructed set does not resolve pair ({x},{y})"));
        }
        Ok(assemble(g, k, &ps, vs, Method::Formula, start, 0))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Maximum number of branch-and-bound nodes.
    pub budget: Option<u64>,
    /// Accept disconnected graphs; unreachable pairs read `k + 1`.
    pub allow_disconnected: bool,
}

impl SolveOptions {
    pub fn with_budget(budget: u64) -> Self {
        SolveOptions { budget: Some(budget), ..Self::default() }
    }

    pub fn disconnected() -> Self {
        SolveOptions { allow_disconnected: true, ..Self::default() }
    }
}

/// Radius at which the search runs. On a connected graph of diameter `d >= 2`
/// every `k >= d - 1` gives the same answer; on a disconnected graph radii at
/// or above the largest component diameter do.
fn effective_radius(g: &Graph, k: u32) -> u32 {
    let cap = match g.diameter() {
        Diameter::Finite(d) => d.saturating_sub(1).max(1),
        Diameter::Infinite => g
            .components()
            .iter()
            .map(|c| g.induced(c).diameter().finite().unwrap_or(0))
            .max()
            .unwrap_or(0)
            .max(1),
    };
    k.min(cap as u32)
}

fn validate(g: &Graph, k: u32, opts: &SolveOptions) -> Result<()> {
    if k == 0 {
        return input("radius k must be positive");
    }
    if g.order() < 2 {
        return input("solving needs at least two vertices");
    }
    if !opts.allow_disconnected {
        require_connected(g)?;
    }
    Ok(())
}

fn prepare(g: &Graph, k: u32, opts: &SolveOptions) -> Result<PairSystem> {
    validate(g, k, opts)?;
    let ps = PairSystem::build(g, effective_radius(g, k));
    if let Some((x, y)) = ps.infeasible {
        return Err(Error::Infeasible(x, y));
    }
    Ok(ps)
}

fn assemble(g: &Graph, k: u32, ps: &PairSystem, set: VertexSet, method: Method, start: Instant, nodes: u64) -> Certificate {
    let n = g.order();
    let witnesses = ps
        .pairs
        .iter()
        .filter_map(|p| {
            let mut hit = p.distinguishers.clone();
            hit.intersect_with(&set);
            hit.first().map(|w| ((p.x, p.y), w))
        })
        .collect();
    let (diameter, refined) = match g.diameter() {
        Diameter::Finite(d) if d >= 1 => (Some(diameter_upper_bound(n, d, k)), Some(refined_upper_bound(n, d, k))),
        _ => (None, None),
    };
    Certificate {
        n,
        k,
        dim: set.len(),
        set: set.to_vec(),
        method,
        elapsed_ms: start.elapsed().as_millis() as u64,
        bounds: CertificateBounds { twin: twin_lower_bound(g), diameter, refined },
        witnesses,
        nodes,
    }
}

/// Greedy set cover on the pair system: repeatedly take the vertex that
/// distinguishes the most still-unresolved pairs (lowest index on ties), then
/// drop vertices that became redundant, highest index first.
pub fn greedy_upper(ps: &PairSystem) -> Result<Vec<usize>> {
    if let Some((x, y)) = ps.infeasible {
        return Err(Error::Infeasible(x, y));
    }
    Ok(greedy_set(ps).to_vec())
}

fn greedy_set(ps: &PairSystem) -> VertexSet {
    let n = ps.n;
    let mut chosen = VertexSet::new(n);
    let mut open: Vec<&VertexSet> = ps.pairs.iter().map(|p| &p.distinguishers).collect();
    while !open.is_empty() {
        let mut counts = vec![0usize; n];
        for r in &open {
            for v in r.iter() {
                counts[v] += 1;
            }
        }
        let best = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("n >= 1");
        chosen.insert(best);
        open.retain(|r| !r.contains(best));
    }
    for v in chosen.to_vec().into_iter().rev() {
        chosen.remove(v);
        if !ps.is_hit_by(&chosen) {
            chosen.insert(v);
        }
    }
    chosen
}

/// Exact `dim_k(G)` with the lexicographically smallest optimal set.
///
/// Errors with [`Error::NotConnected`] on disconnected input unless
/// `opts.allow_disconnected` is set. When the node budget runs out the
/// certificate carries the best set found and method
/// [`Method::GreedyUpper`].
pub fn solve_dim_k(g: &Graph, k: u32, opts: SolveOptions) -> Result<Certificate> {
    let start = Instant::now();
    let ps = prepare(g, k, &opts)?;
    let inst = HittingSetInstance::new(ps.n, ps.pairs.iter().map(|p| &p.distinguishers));
    let incumbent = greedy_set(&ps);
    let lower = inst.root_lower_bound().max(twin_lower_bound(g)).max(1);
    let (best, nodes, exhausted) = BranchAndBound::new(&inst, incumbent, lower, opts.budget).run();
    if exhausted {
        return Ok(assemble(g, k, &ps, best, Method::GreedyUpper, start, nodes));
    }
    let canonical = LexSearch::new(&inst, best.len(), false)
        .run()
        .into_iter()
        .next()
        .expect("an optimal set of this size exists");
    Ok(assemble(g, k, &ps, canonical, Method::Exact, start, nodes))
}

/// Bounds and the greedy set only, without search.
pub fn bound_only(g: &Graph, k: u32, opts: SolveOptions) -> Result<Certificate> {
    let start = Instant::now();
    let ps = prepare(g, k, &opts)?;
    let set = greedy_set(&ps);
    Ok(assemble(g, k, &ps, set, Method::BoundOnly, start, 0))
}

/// Classical metric dimension: `dim_k` at `k = max(diam - 1, 1)`.
pub fn solve_dim(g: &Graph, opts: SolveOptions) -> Result<Certificate> {
    validate(g, 1, &opts)?;
    let k = match g.diameter() {
        Diameter::Finite(d) => d.saturating_sub(1).max(1) as u32,
        Diameter::Infinite => return Err(Error::NotConnected),
    };
    solve_dim_k(g, k, opts)
}

/// Exact `dim_k(G)` for a connected graph.
pub fn dim_k(g: &Graph, k: u32) -> Result<usize> {
    let cert = solve_dim_k(g, k, SolveOptions::default())?;
    Ok(cert.dim)
}

/// The optimum and every minimum distance-`k` resolving set, each sorted,
/// in lexicographic order.
pub fn all_minimum_sets(g: &Graph, k: u32, opts: SolveOptions) -> Result<(usize, Vec<Vec<usize>>)> {
    let opt = solve_dim_k(g, k, SolveOptions { budget: None, ..opts })?.dim;
    let ps = prepare(g, k, &opts)?;
    let inst = HittingSetInstance::new(ps.n, ps.pairs.iter().map(|p| &p.distinguishers));
    let sets = LexSearch::new(&inst, opt, true).run().iter().map(VertexSet::to_vec).collect();
    Ok((opt, sets))
}
