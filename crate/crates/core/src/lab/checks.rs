use std::time::Instant;

use serde::Serialize;

use super::gaps::{gap_profile, GapKind};
use super::{Status, SweepReport, SweepRow};
use crate::enumerate::enumerate_connected;
use crate::error::{input, Result};
use crate::families::{cycle, path};
use crate::formulas::classify_extreme;
use crate::graph::{Diameter, Graph};
use crate::io::to_graph6;
use crate::solver::{
    all_minimum_sets, bound_only, max_order, solve_dim, solve_dim_k, Certificate, SolveOptions,
};

/// Largest order for which all minimum sets are enumerated.
const MAX_GAP_ORDER: usize = 16;

fn exact(g: &Graph, k: u32) -> Result<Certificate> {
    solve_dim_k(g, k, SolveOptions::default())
}

fn name(g: &Graph) -> &str {
    g.label().unwrap_or("graph")
}

fn check_gap_lemma(kind: GapKind, g: &Graph, k: u32) -> Result<SweepReport> {
    let n = g.order();
    let tag = match kind {
        GapKind::Cycle => "cycle",
        GapKind::Path => "path",
    };
    let start = Instant::now();
    let (opt, sets) = all_minimum_sets(g, k, SolveOptions::default())?;
    let mut rows = Vec::new();
    for (i, m) in sets.iter().enumerate() {
        let id = format!("gap-{tag} n={n:02} k={k} #{i:04}");
        let set = format!("{m:?}");
        let row = if m.len() < 2 {
            SweepRow::new(id, Some(k), "all clauses", "fewer than two vertices", Status::Vacuous)
        } else {
            let bad = gap_profile(kind, n, m)?.violations(k);
            let observed = if bad.is_empty() { "all clauses".to_string() } else { bad.join("; ") };
            SweepRow::new(id, Some(k), "all clauses", observed, Status::from_ok(bad.is_empty()))
        };
        rows.push(row.with_note(format!("dim={opt} set={set}")).with_elapsed(start));
    }
    Ok(SweepReport::with_rows(format!("gap-lemma-{tag}"), rows))
}

/// Checks the gap structure of every minimum distance-`k` resolving set of
/// `C_n`, one row per set.
pub fn check_gap_lemma_cycle(n: usize, k: u32) -> Result<SweepReport> {
    if k == 0 || n < 2 * k as usize + 3 || n > MAX_GAP_ORDER {
        return input(format!("cycle gap check needs k >= 1 and 2k+3 <= n <= {MAX_GAP_ORDER}"));
    }
    check_gap_lemma(GapKind::Cycle, &cycle(n)?, k)
}

/// Checks the gap structure of every minimum distance-`k` resolving set of
/// `P_n`, one row per set.
pub fn check_gap_lemma_path(n: usize, k: u32) -> Result<SweepReport> {
    if k == 0 || n < k as usize + 3 || n > MAX_GAP_ORDER {
        return input(format!("path gap check needs k >= 1 and k+3 <= n <= {MAX_GAP_ORDER}"));
    }
    check_gap_lemma(GapKind::Path, &path(n)?, k)
}

fn skipped(suite: &str, g: &Graph, why: &str) -> SweepReport {
    SweepReport::with_rows(suite, vec![SweepRow::new(name(g), None, "-", "-", Status::Skipped).with_note(why)])
}

/// `dim(G) <= dim_kmax(G) <= ... <= dim_1(G)`, one row per link.
pub fn check_monotonicity(g: &Graph, k_max: u32) -> Result<SweepReport> {
    if !g.is_connected() || g.order() < 2 {
        return Ok(skipped("monotonicity", g, "needs a connected graph with n >= 2"));
    }
    let k_max = k_max.max(1);
    let start = Instant::now();
    let dims = (1..=k_max).map(|k| exact(g, k).map(|c| c.dim)).collect::<Result<Vec<_>>>()?;
    let classical = solve_dim(g, SolveOptions::default())?.dim;
    let id = name(g);
    let mut rows = Vec::new();
    for k in 2..=k_max {
        let (hi, lo) = (dims[k as usize - 2], dims[k as usize - 1]);
        rows.push(
            SweepRow::new(format!("{id} mono"), Some(k), format!("<= {hi}"), lo, Status::from_ok(lo <= hi))
                .with_note(format!("dim_{k} vs dim_{}", k - 1)),
        );
    }
    let top = dims[k_max as usize - 1];
    rows.push(
        SweepRow::new(format!("{id} mono"), None, format!("<= {top}"), classical, Status::from_ok(classical <= top))
            .with_note(format!("dim vs dim_{k_max}")),
    );
    let rows = rows.into_iter().map(|r| r.with_elapsed(start)).collect();
    Ok(SweepReport::with_rows("monotonicity", rows))
}

/// `dim_k(G) = dim(G)` whenever `k >= diam - 1` or `diam <= 2`, checked for
/// `k` up to `max(k_max, diam)`.
pub fn check_diameter_collapse(g: &Graph, k_max: u32) -> Result<SweepReport> {
    let d = match g.diameter() {
        Diameter::Finite(d) if d >= 1 => d as u32,
        _ => return Ok(skipped("diameter-collapse", g, "needs a connected graph with n >= 2")),
    };
    let start = Instant::now();
    let classical = solve_dim(g, SolveOptions::default())?.dim;
    let mut rows = Vec::new();
    for k in 1..=k_max.max(d) {
        if d <= 2 || k + 1 >= d {
            let dk = exact(g, k)?.dim;
            rows.push(
                SweepRow::compare(format!("{} collapse", name(g)), Some(k), classical, dk)
                    .with_note(format!("diam={d}"))
                    .with_elapsed(start),
            );
        }
    }
    Ok(SweepReport::with_rows("diameter-collapse", rows))
}

/// Compares the structural class of every connected graph of order `n`
/// against its exact `dim_k`.
pub fn characterization_sweep(n: usize, k: u32) -> Result<SweepReport> {
    if !(2..=7).contains(&n) {
        return input("characterization sweep supports 2 <= n <= 7");
    }
    let mut rows = Vec::new();
    for (i, g) in enumerate_connected(n)?.iter().enumerate() {
        let start = Instant::now();
        let class = classify_extreme(g, k)?;
        let dim = exact(g, k)?.dim;
        let (expected, ok) = match class.predicted(n) {
            Some(p) => (p.to_string(), p == dim),
            None => (format!("not in {{1,{},{}}}", n - 2, n - 1), dim != 1 && dim + 2 != n && dim + 1 != n),
        };
        let note = format!("{class} g6={}", to_graph6(g));
        rows.push(
            SweepRow::new(format!("char n={n} k={k} #{i:04}"), Some(k), expected, dim, Status::from_ok(ok))
                .with_note(note)
                .with_elapsed(start),
        );
    }
    Ok(SweepReport::with_rows("characterization", rows))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Deletion {
    Vertex(usize),
    Edge(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeletionOutcome {
    pub k: u32,
    pub element: Deletion,
    pub before: usize,
    /// `None` when the deletion disconnects the graph.
    pub after: Option<usize>,
    pub delta: Option<i64>,
    /// Edge deletions only: `delta <= 1` for `k <= 2`, `delta <= 2` for
    /// `k >= 3`, and `delta >= -1` for `k = 1`.
    pub within_bounds: Option<bool>,
}

impl DeletionOutcome {
    pub fn skipped(&self) -> bool {
        self.after.is_none()
    }

    /// Row comparing against claimed `(before, after)` values when given,
    /// and against the edge-deletion bounds otherwise.
    pub fn to_row(&self, id: impl Into<String>, claimed: Option<(usize, usize)>) -> SweepRow {
        let Some(after) = self.after else {
            return SweepRow::new(id, Some(self.k), "-", "-", Status::Skipped).with_note("deletion disconnects");
        };
        let observed = format!("({},{after})", self.before);
        let bounds_ok = self.within_bounds.unwrap_or(true);
        let (expected, ok) = match claimed {
            Some((b, a)) => (format!("({b},{a})"), (b, a) == (self.before, after) && bounds_ok),
            None => ("delta within bounds".to_string(), bounds_ok),
        };
        SweepRow::new(id, Some(self.k), expected, observed, Status::from_ok(ok))
            .with_note(format!("delta={}", self.delta.unwrap_or(0)))
    }
}

/// Exact `dim_k` before and after deleting a vertex or an edge.
pub fn deletion_experiment(g: &Graph, element: Deletion, k: u32) -> Result<DeletionOutcome> {
    let before = exact(g, k)?.dim;
    let h = match element {
        Deletion::Vertex(v) => g.delete_vertex(v)?,
        Deletion::Edge(u, v) => g.delete_edge(u, v)?,
    };
    if !h.is_connected() || h.order() < 2 {
        return Ok(DeletionOutcome { k, element, before, after: None, delta: None, within_bounds: None });
    }
    let after = exact(&h, k)?.dim;
    let delta = after as i64 - before as i64;
    let within_bounds = match element {
        Deletion::Vertex(_) => None,
        Deletion::Edge(..) => {
            let up = if k <= 2 { 1 } else { 2 };
            Some(delta <= up && (k != 1 || delta >= -1))
        }
    };
    Ok(DeletionOutcome { k, element, before, after: Some(after), delta: Some(delta), within_bounds })
}

/// Exact `dim_k` against the twin lower bound, the diameter upper bounds,
/// the greedy upper bound and the maximum-order bound.
pub fn bound_audit(g: &Graph, k: u32) -> Result<SweepReport> {
    if !g.is_connected() || g.order() < 2 {
        return Ok(skipped("bounds", g, "needs a connected graph with n >= 2"));
    }
    let start = Instant::now();
    let cert = exact(g, k)?;
    let greedy = bound_only(g, k, SolveOptions::default())?.dim;
    let b = &cert.bounds;
    let dim = cert.dim;
    let id = format!("{} bounds", name(g));
    let mut rows = vec![
        SweepRow::new(&id, Some(k), format!(">= {}", b.twin), dim, Status::from_ok(b.twin <= dim)).with_note("twin"),
        SweepRow::new(&id, Some(k), format!("<= {greedy}"), dim, Status::from_ok(dim <= greedy)).with_note("greedy"),
    ];
    if let (Some(dia), Some(refined)) = (b.diameter, b.refined) {
        rows.push(SweepRow::new(&id, Some(k), format!("<= {dia}"), dim, Status::from_ok(dim <= dia)).with_note("diameter"));
        rows.push(
            SweepRow::new(&id, Some(k), format!("<= {refined}"), dim, Status::from_ok(dim <= refined)).with_note("refined"),
        );
    }
    let cap = max_order(k, dim as u32);
    let n = g.order();
    rows.push(
        SweepRow::new(&id, Some(k), format!(">= {n}"), cap, Status::from_ok(n as u128 <= cap)).with_note("max order"),
    );
    let rows = rows.into_iter().map(|r| r.with_elapsed(start)).collect();
    Ok(SweepReport::with_rows("bounds", rows))
}
