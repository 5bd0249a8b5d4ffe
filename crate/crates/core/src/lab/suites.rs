use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::{
    bound_audit, characterization_sweep, check_diameter_collapse, check_gap_lemma_cycle, check_gap_lemma_path,
    check_monotonicity, deletion_experiment, Deletion,
};
use super::{Status, SweepReport, SweepRow};
use crate::error::{input, Error, Result};
use crate::families::{
    complete, complete_multipartite, cycle, cycle_optimal_set, edge_gap_family, edge_sharpness_family, fan, grid,
    grid_resolving_set, path, path_optimal_set, petersen, random_connected, ratio_family, subdivided_complete,
    ternary_extremal, vdeletion_family, wheel,
};
use crate::formulas::{
    dim_k_complete, dim_k_cycle, dim_k_fan, dim_k_multipartite, dim_k_path, dim_k_petersen, dim_k_wheel,
    wheel_deletion_delta, FamilyValue,
};
use crate::graph::Graph;
use crate::solver::{is_resolving, max_order, solve_dim, solve_dim_k, SolveOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Formulas,
    GapLemmas,
    Monotonicity,
    Characterization,
    Deletion,
    Bounds,
    Constructions,
}

impl Suite {
    pub const ALL: [Suite; 7] = [
        Suite::Formulas,
        Suite::GapLemmas,
        Suite::Monotonicity,
        Suite::Characterization,
        Suite::Deletion,
        Suite::Bounds,
        Suite::Constructions,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Formulas => "formulas",
            Suite::GapLemmas => "gap-lemmas",
            Suite::Monotonicity => "monotonicity",
            Suite::Characterization => "characterization",
            Suite::Deletion => "deletion",
            Suite::Bounds => "bounds",
            Suite::Constructions => "constructions",
        }
    }

    /// Default `(n_max, k_max)`.
    fn defaults(self) -> (usize, u32) {
        match self {
            Suite::Formulas => (16, 4),
            Suite::GapLemmas => (14, 3),
            Suite::Monotonicity => (8, 3),
            Suite::Characterization => (6, 3),
            Suite::Deletion => (9, 3),
            Suite::Bounds => (9, 3),
            Suite::Constructions => (16, 4),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Suite> {
        let s = s.trim().to_ascii_lowercase().replace('_', "-");
        Suite::ALL.into_iter().find(|x| x.as_str() == s).map_or_else(
            || {
                let names: Vec<_> = Suite::ALL.iter().map(|x| x.as_str()).collect();
                input(format!("unknown suite '{s}' (known: {})", names.join(", ")))
            },
            Ok,
        )
    }
}

#[derive(Debug, Clone, Copy)]
pub struct SweepConfig {
    /// Largest order swept; `None` uses the suite default.
    pub n_max: Option<usize>,
    pub k_max: Option<u32>,
    /// Number of random instances in randomized suites.
    pub samples: usize,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig { n_max: None, k_max: None, samples: 100, seed: 1, jobs: 1 }
    }
}

type Task = Box<dyn Fn() -> Result<Vec<SweepRow>> + Send + Sync>;

fn task(f: impl Fn() -> Result<Vec<SweepRow>> + Send + Sync + 'static) -> Task {
    Box::new(f)
}

fn run_tasks(tasks: Vec<Task>, jobs: usize) -> Result<Vec<SweepRow>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Input(format!("cannot start worker pool: {e}")))?;
    let chunks: Vec<Vec<SweepRow>> = pool.install(|| tasks.par_iter().map(|t| t()).collect::<Result<_>>())?;
    Ok(chunks.into_iter().flatten().collect())
}

pub fn run_suite(suite: Suite, cfg: &SweepConfig) -> Result<SweepReport> {
    let (dn, dk) = suite.defaults();
    let n_max = cfg.n_max.unwrap_or(dn);
    let k_max = cfg.k_max.unwrap_or(dk);
    if k_max == 0 {
        return input("k_max must be positive");
    }
    let tasks = match suite {
        Suite::Formulas => formula_tasks(n_max, k_max),
        Suite::GapLemmas => gap_tasks(n_max.min(16), k_max),
        Suite::Monotonicity => monotonicity_tasks(n_max, k_max, cfg),
        Suite::Characterization => {
            if n_max > 7 {
                return input("characterization sweep supports n <= 7");
            }
            characterization_tasks(n_max, k_max)
        }
        Suite::Deletion => deletion_tasks(n_max, k_max, cfg),
        Suite::Bounds => bounds_tasks(n_max, k_max, cfg),
        Suite::Constructions => construction_tasks(n_max, k_max),
    };
    Ok(SweepReport::with_rows(suite.as_str(), run_tasks(tasks, cfg.jobs)?))
}

/// Every suite with its default ranges; `cfg` supplies seed, samples and
/// jobs.
pub fn run_all(cfg: &SweepConfig) -> Result<SweepReport> {
    let mut all = SweepReport::new("all");
    for s in Suite::ALL {
        let plain = SweepConfig { n_max: None, k_max: None, ..*cfg };
        let mut r = run_suite(s, &plain)?;
        for row in &mut r.rows {
            row.id = format!("{s}/{}", row.id);
        }
        all.append(r);
    }
    Ok(all)
}

fn formula_row(id: String, g: Graph, k: u32, fv: Result<FamilyValue>) -> Result<Vec<SweepRow>> {
    let start = Instant::now();
    let fv = fv?;
    let dim = solve_dim_k(&g, k, SolveOptions::default())?.dim;
    Ok(vec![SweepRow::compare(id, Some(k), fv.value, dim).with_note(fv.branch).with_elapsed(start)])
}

/// Non-increasing part lists with at least two parts and total at most `n`.
fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() >= 2 {
            out.push(cur.clone());
        }
        for p in (1..=max.min(left)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

fn formula_tasks(n_max: usize, k_max: u32) -> Vec<Task> {
    let mut t = Vec::new();
    for k in 1..=k_max {
        for n in 2..=n_max {
            t.push(task(move || formula_row(format!("path n={n:02}"), path(n)?, k, dim_k_path(n, k))));
        }
        for n in 3..=n_max {
            t.push(task(move || formula_row(format!("cycle n={n:02}"), cycle(n)?, k, dim_k_cycle(n, k))));
        }
    }
    for k in 1..=k_max.min(3) {
        for n in 3..=n_max.min(11) {
            t.push(task(move || formula_row(format!("wheel n={n:02}"), wheel(n)?, k, dim_k_wheel(n, k))));
        }
        for n in 1..=n_max.min(11) {
            t.push(task(move || formula_row(format!("fan n={n:02}"), fan(n)?, k, dim_k_fan(n, k))));
        }
        for parts in partitions(n_max.min(9)) {
            let id = format!("multipartite parts={}", parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("/"));
            t.push(task(move || formula_row(id.clone(), complete_multipartite(&parts)?, k, dim_k_multipartite(&parts, k))));
        }
        for n in 2..=n_max.min(8) {
            t.push(task(move || formula_row(format!("complete n={n:02}"), complete(n)?, k, dim_k_complete(n, k))));
        }
        t.push(task(move || formula_row("petersen".into(), petersen(), k, dim_k_petersen(k))));
    }
    t
}

fn gap_tasks(n_max: usize, k_max: u32) -> Vec<Task> {
    let mut t = Vec::new();
    for k in 1..=k_max {
        let kk = k as usize;
        for n in 2 * kk + 3..=n_max {
            t.push(task(move || Ok(check_gap_lemma_cycle(n, k)?.rows)));
        }
        for n in kk + 3..=n_max {
            t.push(task(move || Ok(check_gap_lemma_path(n, k)?.rows)));
        }
    }
    t
}

/// Seeded connected graph for instance `i`; order drawn from `n_lo..=n_hi`.
fn sample_graph(seed: u64, i: usize, n_lo: usize, n_hi: usize) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(1_000_003).wrapping_add(i as u64));
    let n = rng.gen_range(n_lo..=n_hi.max(n_lo));
    let p = rng.gen_range(0.1..0.6);
    Ok(random_connected(n, p, &mut rng)?.with_label(format!("random s={seed} #{i:04} n={n}")))
}

fn named_graphs() -> Result<Vec<Graph>> {
    Ok(vec![petersen(), wheel(10)?, path(7)?, complete(5)?, path(5)?, cycle(9)?])
}

fn monotonicity_tasks(n_max: usize, k_max: u32, cfg: &SweepConfig) -> Vec<Task> {
    let mut t = Vec::new();
    let run = move |g: &Graph| -> Result<Vec<SweepRow>> {
        let km = g.diameter().finite().unwrap_or(1).max(1) as u32;
        let mut rows = check_monotonicity(g, km.max(k_max))?.rows;
        rows.extend(check_diameter_collapse(g, k_max)?.rows);
        Ok(rows)
    };
    t.push(task(move || {
        let mut rows = Vec::new();
        for g in named_graphs()? {
            rows.extend(run(&g)?);
        }
        Ok(rows)
    }));
    let (seed, n_hi) = (cfg.seed, n_max.max(4));
    for i in 0..cfg.samples {
        t.push(task(move || run(&sample_graph(seed, i, 4, n_hi)?)));
    }
    t
}

fn characterization_tasks(n_max: usize, k_max: u32) -> Vec<Task> {
    let mut t = Vec::new();
    for n in 4..=n_max {
        for k in 1..=k_max {
            t.push(task(move || Ok(characterization_sweep(n, k)?.rows)));
        }
    }
    t
}

/// Picks a graph and an edge whose removal keeps it connected, resampling
/// the graph until one exists.
fn sample_edge_trial(seed: u64, i: usize, n_hi: usize) -> Result<(Graph, (usize, usize))> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(7_368_787).wrapping_add(i as u64));
    for _ in 0..1000 {
        let n = rng.gen_range(4..=n_hi.max(4));
        let p = rng.gen_range(0.15..0.6);
        let g = random_connected(n, p, &mut rng)?;
        let edges = g.edges();
        let off = rng.gen_range(0..edges.len());
        for j in 0..edges.len() {
            let (u, v) = edges[(off + j) % edges.len()];
            if g.delete_edge(u, v)?.is_connected() {
                return Ok((g.with_label(format!("random-edge s={seed} #{i:04} n={n}")), (u, v)));
            }
        }
    }
    input("could not sample a graph with a non-bridge edge")
}

fn deletion_tasks(n_max: usize, k_max: u32, cfg: &SweepConfig) -> Vec<Task> {
    let mut t = Vec::new();
    let edge_case = |id: String, g: Graph, e: (usize, usize), k: u32, claimed: Option<(usize, usize)>| -> Task {
        task(move || {
            let start = Instant::now();
            let o = deletion_experiment(&g, Deletion::Edge(e.0, e.1), k)?;
            Ok(vec![o.to_row(id.clone(), claimed).with_elapsed(start)])
        })
    };
    let push_family = |t: &mut Vec<Task>| -> Result<()> {
        let (g, e) = edge_sharpness_family(3, 2, 3)?;
        t.push(edge_case("edge_sharpness:a=3,b=2,c=3".into(), g.clone(), e, 2, Some((4, 5))));
        t.push(edge_case("edge_sharpness:a=3,b=2,c=3".into(), g.clone(), e, 3, Some((3, 5))));
        t.push(edge_case("edge_sharpness:a=3,b=2,c=3".into(), g, e, 1, None));
        let (g, e) = edge_sharpness_family(2, 2, 2)?;
        for k in 1..=3 {
            t.push(edge_case("edge_sharpness:a=2,b=2,c=2".into(), g.clone(), e, k, None));
        }
        for a in 2..=3 {
            let (g, e) = edge_gap_family(a)?;
            for k in 2..=3 {
                t.push(edge_case(format!("edge_gap:a={a}"), g.clone(), e, k, Some((2 * a, a + 1))));
            }
            let (g, v) = vdeletion_family(a)?;
            for k in 1..=2 {
                let g = g.clone();
                t.push(task(move || {
                    let start = Instant::now();
                    let o = deletion_experiment(&g, Deletion::Vertex(v), k)?;
                    Ok(vec![o.to_row(format!("vdeletion:a={a}"), Some((a + 1, 2 * a))).with_elapsed(start)])
                }));
            }
        }
        Ok(())
    };
    if let Err(e) = push_family(&mut t) {
        let msg = e.to_string();
        t.push(task(move || input(msg.clone())));
    }
    let seed = cfg.seed;
    for i in 0..cfg.samples {
        let k = 1 + (i as u32 % k_max);
        t.push(task(move || {
            let start = Instant::now();
            let (g, (u, v)) = sample_edge_trial(seed, i, n_max)?;
            let o = deletion_experiment(&g, Deletion::Edge(u, v), k)?;
            let id = g.label().unwrap_or("random-edge").to_string();
            Ok(vec![o.to_row(id, None).with_note(format!("edge=({u},{v}) delta={}", o.delta.unwrap_or(0))).with_elapsed(start)])
        }));
    }
    t
}

fn bounds_tasks(n_max: usize, k_max: u32, cfg: &SweepConfig) -> Vec<Task> {
    let mut t = Vec::new();
    t.push(task(move || {
        let mut rows = Vec::new();
        for k in 1..=k_max {
            rows.extend(bound_audit(&complete(6)?, k)?.rows);
            rows.extend(bound_audit(&path(k as usize + 2)?, k)?.rows);
            for g in named_graphs()? {
                rows.extend(bound_audit(&g, k)?.rows);
            }
        }
        Ok(rows)
    }));
    let seed = cfg.seed;
    for i in 0..cfg.samples {
        let k = 1 + (i as u32 % k_max);
        t.push(task(move || Ok(bound_audit(&sample_graph(seed, i, 4, n_max.max(4))?, k)?.rows)));
    }
    t
}

fn construction_tasks(n_max: usize, k_max: u32) -> Vec<Task> {
    let mut t = Vec::new();
    for beta in 1..=3usize {
        t.push(task(move || {
            let start = Instant::now();
            let (g, s) = ternary_extremal(beta)?;
            let c = solve_dim_k(&g, 2, SolveOptions::disconnected())?;
            let id = format!("ternary:beta={beta}");
            Ok(vec![
                SweepRow::compare(format!("{id} order"), None, beta + 3usize.pow(beta as u32), g.order()),
                SweepRow::compare(format!("{id} resolving"), Some(2), true, is_resolving(&g, &s, 2)),
                SweepRow::compare(format!("{id} dim"), Some(2), beta, c.dim).with_elapsed(start),
            ])
        }));
    }
    t.push(task(|| {
        Ok((1..=6u32)
            .map(|b| SweepRow::compare(format!("max_order j=1 beta={b}"), Some(1), (1u128 << b) + b as u128, max_order(1, b)))
            .chain((1..=6u32).map(|b| {
                SweepRow::compare(format!("max_order j=2 beta={b}"), Some(2), 3u128.pow(b) + b as u128, max_order(2, b))
            }))
            .collect())
    }));
    for k in 2..=3u32 {
        t.push(task(move || {
            let (g, s) = grid_resolving_set(k)?;
            let kk = k as usize;
            let cap = (kk + 2).pow(2) + (kk + 1).pow(2);
            Ok(vec![
                SweepRow::compare(format!("grid_lattice:k={k} resolving"), Some(k), true, is_resolving(&g, &s, k)),
                SweepRow::new(format!("grid_lattice:k={k} size"), Some(k), format!("<= {cap}"), s.len(), Status::from_ok(s.len() <= cap)),
            ])
        }));
    }
    for (m, n) in [(3, 4), (4, 4)] {
        t.push(task(move || {
            let dim = solve_dim(&grid(m, n)?, SolveOptions::default())?.dim;
            Ok(vec![SweepRow::compare(format!("grid:m={m},n={n} dim"), None, 2, dim)])
        }));
    }
    for k in 1..=2u32 {
        t.push(task(move || {
            let r = ratio_family(3)?;
            let dh = solve_dim_k(&r.h, k, SolveOptions::default())?.dim;
            let dg = solve_dim_k(&r.g, k, SolveOptions::default())?.dim;
            Ok(vec![
                SweepRow::compare("ratio:m=3 dim H".to_string(), Some(k), 5, dh),
                SweepRow::compare("ratio:m=3 u resolving".to_string(), Some(k), true, is_resolving(&r.g, &r.u, k)),
                SweepRow::new("ratio:m=3 dim G", Some(k), "<= 3", dg, Status::from_ok(dg <= 3)),
            ])
        }));
    }
    for m in 3..=4usize {
        t.push(task(move || {
            let g = subdivided_complete(m)?;
            (1..=2)
                .map(|k| Ok(SweepRow::compare(format!("subdivided_complete:m={m}"), Some(k), m, solve_dim_k(&g, k, SolveOptions::default())?.dim)))
                .collect()
        }));
    }
    for k in 1..=k_max {
        let kk = k as usize;
        for n in 3 * kk + 4..=n_max {
            t.push(task(move || {
                let s = cycle_optimal_set(n, k)?;
                let want = dim_k_cycle(n, k)?.value;
                let ok = s.len() == want && is_resolving(&cycle(n)?, &s, k);
                Ok(vec![SweepRow::new(format!("cycle_set n={n:02}"), Some(k), want, s.len(), Status::from_ok(ok))
                    .with_note(format!("{s:?}"))])
            }));
        }
        for n in 2..=n_max {
            t.push(task(move || {
                let s = path_optimal_set(n, k)?;
                let want = dim_k_path(n, k)?.value;
                let ok = s.len() == want && is_resolving(&path(n)?, &s, k);
                Ok(vec![SweepRow::new(format!("path_set n={n:02}"), Some(k), want, s.len(), Status::from_ok(ok))
                    .with_note(format!("{s:?}"))])
            }));
        }
    }
    t.push(task(|| {
        (2..=3u32)
            .map(|k| Ok(SweepRow::compare("wheel_deletion x=1".to_string(), Some(k), 6 * (k as i64 - 1), wheel_deletion_delta(k, 1)?)))
            .collect()
    }));
    t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partitions_of_four() {
        let mut got = partitions(4);
        got.sort();
        let want = vec![vec![1, 1], vec![1, 1, 1], vec![1, 1, 1, 1], vec![2, 1], vec![2, 1, 1], vec![2, 2], vec![3, 1]];
        assert_eq!(got, want);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn rerun_is_identical_across_jobs() {
        let cfg = SweepConfig { n_max: Some(7), k_max: Some(2), samples: 6, seed: 9, jobs: 1 };
        let a = run_suite(Suite::Bounds, &cfg).unwrap();
        let b = run_suite(Suite::Bounds, &SweepConfig { jobs: 3, ..cfg }).unwrap();
        assert!(a.passed());
        assert!(a.same_outcome(&b));
        assert_eq!(a.to_csv(), b.to_csv());
    }
}
