//! Generators for named graph families and for explicit resolving-set
//! constructions. Vertex numbering is deterministic: hubs first, then groups
//! in index order.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{input, Result};
use crate::formulas::{dim_k_cycle, dim_k_path};
use crate::graph::Graph;
use crate::solver::{code_vector, is_resolving};

/// Largest order any generator will build.
pub const MAX_GENERATED_ORDER: usize = 10_000;

fn check_order(n: usize) -> Result<()> {
    if n > MAX_GENERATED_ORDER {
        return input(format!("order {n} exceeds the generator cap {MAX_GENERATED_ORDER}"));
    }
    Ok(())
}

fn build(n: usize, edges: &[(usize, usize)], label: String) -> Result<Graph> {
    check_order(n)?;
    Ok(Graph::from_edges(n, edges)?.with_label(label))
}

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return input("path needs n >= 1");
    }
    let e: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    build(n, &e, format!("path:n={n}"))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return input("cycle needs n >= 3");
    }
    let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    build(n, &e, format!("cycle:n={n}"))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return input("complete graph needs n >= 1");
    }
    check_order(n)?;
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            e.push((u, v));
        }
    }
    build(n, &e, format!("complete:n={n}"))
}

/// Parts occupy consecutive vertex ranges in the given order.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return input("multipartite needs nonempty parts");
    }
    let n: usize = parts.iter().sum();
    check_order(n)?;
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat(i).take(p));
    }
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                e.push((u, v));
            }
        }
    }
    build(n, &e, format!("multipartite:parts={}", join_parts(parts)))
}

fn join_parts(parts: &[usize]) -> String {
    parts.iter().map(usize::to_string).collect::<Vec<_>>().join("/")
}

/// `C_n + K_1`; the hub is vertex 0, the rim is `1..=n` in cyclic order.
pub fn wheel(n: usize) -> Result<Graph> {
    let rim = cycle(n)?;
    Ok(Graph::empty(1).join(&rim).with_label(format!("wheel:n={n}")))
}

/// `P_n + K_1`; the hub is vertex 0, the path is `1..=n`.
pub fn fan(n: usize) -> Result<Graph> {
    let p = path(n)?;
    Ok(Graph::empty(1).join(&p).with_label(format!("fan:n={n}")))
}

/// Outer 5-cycle on 0..5, inner pentagram on 5..10, spokes `i -- i+5`.
pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((i, (i + 1) % 5));
        e.push((5 + i, 5 + (i + 2) % 5));
        e.push((i, i + 5));
    }
    Graph::from_edges(10, &e).expect("valid edges").with_label("petersen")
}

/// `P_m x P_n`; cell `(r, c)` is vertex `r * n + c`.
pub fn grid(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return input("grid sides must be positive");
    }
    check_order(m.saturating_mul(n))?;
    let mut e = Vec::new();
    for r in 0..m {
        for c in 0..n {
            let v = r * n + c;
            if c + 1 < n {
                e.push((v, v + 1));
            }
            if r + 1 < m {
                e.push((v, v + n));
            }
        }
    }
    build(m * n, &e, format!("grid:m={m},n={n}"))
}

/// `K_{m+2}` with edge `0 -- 1` subdivided by the new vertex `m + 2`.
pub fn subdivided_complete(m: usize) -> Result<Graph> {
    if m < 3 {
        return input("subdivided complete graph needs m >= 3");
    }
    let base = complete(m + 2)?;
    let mut e: Vec<_> = base.edges().into_iter().filter(|&p| p != (0, 1)).collect();
    e.push((0, m + 2));
    e.push((1, m + 2));
    build(m + 3, &e, format!("subdivided_complete:m={m}"))
}

/// Graph of order `beta + 3^beta` with a distance-2 resolving set of size
/// `beta`.
///
/// Starts from pairs `a_i -- b_i` and one vertex `c_s` per ternary string `s`,
/// joined to `a_i` when digit `i` is 0 and to `b_i` when it is 1. Then for each
/// `i` in turn, the `c_s` whose distance-2 code against `{a_1..a_beta}` equals
/// that of `b_i` (in the current graph) are deleted. Vertices are numbered
/// `a`s, then `b`s, then surviving `c`s in lexicographic string order; the
/// returned set is `0..beta`. The all-2 string gives an isolated vertex, so
/// the graph is disconnected.
pub fn ternary_extremal(beta: usize) -> Result<(Graph, Vec<usize>)> {
    if !(1..=6).contains(&beta) {
        return input("ternary construction needs 1 <= beta <= 6");
    }
    let strings = 3usize.pow(beta as u32);
    let n = 2 * beta + strings;
    let mut e = Vec::new();
    for i in 0..beta {
        e.push((i, beta + i));
    }
    for j in 0..strings {
        for i in 0..beta {
            match (j / 3usize.pow((beta - 1 - i) as u32)) % 3 {
                0 => e.push((2 * beta + j, i)),
                1 => e.push((2 * beta + j, beta + i)),
                _ => {}
            }
        }
    }
    let mut g = Graph::from_edges(n, &e)?;
    let s: Vec<usize> = (0..beta).collect();
    for i in 0..beta {
        let target = code_vector(&g, &s, beta + i, 2);
        let keep: Vec<usize> =
            (0..g.order()).filter(|&v| v < 2 * beta || code_vector(&g, &s, v, 2) != target).collect();
        g = g.induced(&keep);
    }
    Ok((g.with_label(format!("ternary:beta={beta}")), s))
}

/// `B(G1, G2)` restricted to `G1` plus the code vertices `u_b` for the given
/// binary strings. `G1` supplies vertices `0..beta`; `u_b` follow in the order
/// given and is adjacent to `v_i` iff digit `i` of `b` is 1. Edges among the
/// `u_b` come from `g2`, whose vertex `j` stands for the string with binary
/// value `j` (first digit most significant); without `g2` there are none.
pub fn b_graph(g1: &Graph, strings: &[&str], g2: Option<&Graph>) -> Result<Graph> {
    let beta = g1.order();
    if beta > 20 {
        return input("b_graph supports at most 20 landmark vertices");
    }
    if let Some(g2) = g2 {
        if g2.order() != 1 << beta {
            return input(format!("second graph must have 2^{beta} vertices"));
        }
    }
    let mut codes = Vec::with_capacity(strings.len());
    for s in strings {
        if s.len() != beta || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return input(format!("'{s}' is not a binary string of length {beta}"));
        }
        let code = usize::from_str_radix(s, 2).expect("checked binary");
        if codes.contains(&code) {
            return input(format!("duplicate string '{s}'"));
        }
        codes.push(code);
    }
    let n = beta + codes.len();
    let mut e = g1.edges();
    for (j, &code) in codes.iter().enumerate() {
        for i in 0..beta {
            if code >> (beta - 1 - i) & 1 == 1 {
                e.push((i, beta + j));
            }
        }
    }
    if let Some(g2) = g2 {
        for (j1, &c1) in codes.iter().enumerate() {
            for (j2, &c2) in codes.iter().enumerate().skip(j1 + 1) {
                if g2.has_edge(c1, c2) {
                    e.push((beta + j1, beta + j2));
                }
            }
        }
    }
    build(n, &e, format!("b_graph:beta={beta}"))
}

#[derive(Debug, Clone)]
pub struct RatioFamily {
    /// `K_{m(m+1)/2}` with `V_i = {w_{i,1}..w_{i,i}}` laid out consecutively.
    pub h: Graph,
    /// `H` plus `u_1..u_m` as the last `m` vertices.
    pub g: Graph,
    /// Vertices of `u_1..u_m` in `g`.
    pub u: Vec<usize>,
}

/// `u_i` is adjacent to all of `V_i` and to `w_{j,i}` for every `j > i`.
pub fn ratio_family(m: usize) -> Result<RatioFamily> {
    if !(3..=100).contains(&m) {
        return input("ratio family needs 3 <= m <= 100");
    }
    let hn = m * (m + 1) / 2;
    // w_{i,j} with 1-based i, j
    let w = |i: usize, j: usize| (i - 1) * i / 2 + (j - 1);
    let h = complete(hn)?.with_label(format!("ratio_h:m={m}"));
    let mut e = h.edges();
    let u: Vec<usize> = (0..m).map(|i| hn + i).collect();
    for i in 1..=m {
        for j in 1..=i {
            e.push((u[i - 1], w(i, j)));
        }
        for j in i + 1..=m {
            e.push((u[i - 1], w(j, i)));
        }
    }
    let g = build(hn + m, &e, format!("ratio_g:m={m}"))?;
    Ok(RatioFamily { h, g, u })
}

/// The `k^2 x k^2` grid with the union of two `(k-1)`-spaced lattices as a
/// distance-`k` resolving set. Coordinates are clamped into the grid and
/// duplicates dropped.
pub fn grid_resolving_set(k: u32) -> Result<(Graph, Vec<usize>)> {
    if !(2..=3).contains(&k) {
        return input("grid lattice construction supports k in 2..=3");
    }
    let k = k as usize;
    let side = k * k;
    let clamp = |x: usize| x.clamp(1, side);
    let mut pts = Vec::new();
    for i in 0..=k + 1 {
        for j in 0..=k + 1 {
            pts.push((clamp(1 + (k - 1) * i), clamp(1 + (k - 1) * j)));
        }
    }
    let off = k.div_ceil(2);
    for i in 0..=k {
        for j in 0..=k {
            pts.push((clamp(off + (k - 1) * i), clamp(off + (k - 1) * j)));
        }
    }
    let mut set: Vec<usize> = pts.into_iter().map(|(x, y)| (x - 1) * side + (y - 1)).collect();
    set.sort_unstable();
    set.dedup();
    Ok((grid(side, side)?.with_label(format!("grid_lattice:k={k}")), set))
}

/// Optimal distance-`k` resolving set of `C_n` for `n >= 3k + 4`, chosen by
/// the residue of `n` modulo `3k + 2`.
pub fn cycle_optimal_set(n: usize, k: u32) -> Result<Vec<usize>> {
    let kk = k as usize;
    if k == 0 || n < 3 * kk + 4 {
        return input("cycle construction needs k >= 1 and n >= 3k+4");
    }
    let m = 3 * kk + 2;
    let (x, j) = (n / m, n % m);
    let mut s = Vec::new();
    if j <= kk + 2 {
        s.extend([0, 2 * kk + 2]);
        for i in 1..x {
            s.extend([m * i + 1, m * i + 2 * kk + 2]);
        }
        if j >= 2 {
            s.push(m * x + 1);
        }
    } else {
        for i in 0..x {
            s.extend([m * i, m * i + 2 * kk + 1]);
        }
        s.extend([m * x, (n - 1).min(m * x + 2 * kk + 1)]);
    }
    s.sort_unstable();
    s.dedup();
    debug_assert_eq!(s.len(), dim_k_cycle(n, k)?.value);
    Ok(s)
}

/// Optimal distance-`k` resolving set of `P_n` (vertices in path order).
///
/// For `n >= 3k + 4` the cycle set is reused: `C_n` is cut at an edge so
/// that the resulting path still resolves, preferring the middle of a gap of
/// `2k + 1` vertices and otherwise taking the lowest working cut.
pub fn path_optimal_set(n: usize, k: u32) -> Result<Vec<usize>> {
    let kk = k as usize;
    if k == 0 || n < 2 {
        return input("path construction needs k >= 1 and n >= 2");
    }
    if n <= kk + 2 {
        return Ok(vec![0]);
    }
    if n <= 3 * kk + 3 {
        return Ok(vec![kk, (2 * kk + 1).min(n - 1)]);
    }
    let cyc = cycle_optimal_set(n, k)?;
    let p = path(n)?;
    // Cutting edge (c, c+1) puts cycle vertex c+1 at path position 0.
    let cut = |c: usize| -> Vec<usize> {
        let mut s: Vec<usize> = cyc.iter().map(|&v| (v + n - (c + 1) % n) % n).collect();
        s.sort_unstable();
        s
    };
    let preferred = (0..cyc.len()).find_map(|i| {
        let (a, b) = (cyc[i], cyc[(i + 1) % cyc.len()]);
        ((b + n - a - 1) % n == 2 * kk + 1).then_some((a + 1 + kk) % n)
    });
    let candidates = preferred.into_iter().chain(0..n);
    for c in candidates {
        let s = cut(c);
        if is_resolving(&p, &s, k) {
            debug_assert_eq!(s.len(), dim_k_path(n, k)?.value);
            return Ok(s);
        }
    }
    input(format!("no cut of the cycle construction resolves P_{n} at k={k}"))
}

/// Hub 0 adjacent to `a` disjoint triangles `{x_i, y_i, z_i}` (vertices
/// `1+3i..=3+3i`), plus `v = 3a + 1` adjacent to every `y_i`. Returns `v`.
pub fn vdeletion_family(a: usize) -> Result<(Graph, usize)> {
    if a < 2 {
        return input("vertex deletion family needs a >= 2");
    }
    let v = 3 * a + 1;
    let mut e = Vec::new();
    for i in 0..a {
        let (x, y, z) = (1 + 3 * i, 2 + 3 * i, 3 + 3 * i);
        e.extend([(0, x), (0, y), (0, z), (x, y), (y, z), (x, z), (y, v)]);
    }
    Ok((build(3 * a + 2, &e, format!("vdeletion:a={a}"))?, v))
}

/// Wheel with rim `C_{5(3k+2)x}`; returns the hub.
pub fn wheel_deletion_instance(k: u32, x: usize) -> Result<(Graph, usize)> {
    if k < 2 || x < 1 {
        return input("wheel deletion needs k >= 2 and x >= 1");
    }
    let n = 5 * (3 * k as usize + 2) * x;
    Ok((wheel(n)?.with_label(format!("wheel_deletion:k={k},x={x}")), 0))
}

/// Path `h1 -- h2 -- h3` (vertices 0, 1, 2) with `a` leaves on `h1`, `b` on
/// `h2` and `c` on `h3`, numbered in that order. Returns the edge joining the
/// first leaf of `h1` to the first leaf of `h3`.
pub fn edge_sharpness_family(a: usize, b: usize, c: usize) -> Result<(Graph, (usize, usize))> {
    if a < 2 || b < 2 || c < 2 {
        return input("edge sharpness family needs a, b, c >= 2");
    }
    let n = a + b + c + 3;
    let mut e = vec![(0, 1), (1, 2)];
    e.extend((0..a).map(|i| (0, 3 + i)));
    e.extend((0..b).map(|i| (1, 3 + a + i)));
    e.extend((0..c).map(|i| (2, 3 + a + b + i)));
    let edge = (3, 3 + a + b);
    e.push(edge);
    Ok((build(n, &e, format!("edge_sharpness:a={a},b={b},c={c}"))?, edge))
}

/// Hub `h = 0` and `v = 1` joined by the distinguished edge. For each `i`,
/// vertices `z_i, z'_i, x_i, y_i, t_i` follow in that order: `z_i` and `z'_i`
/// hang off `h`, `x_i` and `y_i` are adjacent to exactly `{z_i, z'_i}`, and
/// `t_i` joins `z'_i` to `v`.
pub fn edge_gap_family(a: usize) -> Result<(Graph, (usize, usize))> {
    if a < 2 {
        return input("edge gap family needs a >= 2");
    }
    let mut e = vec![(0, 1)];
    for i in 0..a {
        let b = 2 + 5 * i;
        let (z, zp, x, y, t) = (b, b + 1, b + 2, b + 3, b + 4);
        e.extend([(0, z), (0, zp), (z, x), (z, y), (zp, x), (zp, y), (zp, t), (t, 1)]);
    }
    Ok((build(5 * a + 2, &e, format!("edge_gap:a={a}"))?, (0, 1)))
}

/// Connected graph on `n` vertices: a uniformly shuffled random recursive
/// tree plus every other pair independently with probability `p`.
pub fn random_connected<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Result<Graph> {
    if n < 1 {
        return input("random graph needs n >= 1");
    }
    check_order(n)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut e = Vec::new();
    for i in 1..n {
        e.push((order[rng.gen_range(0..i)], order[i]));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p.clamp(0.0, 1.0)) {
                e.push((u, v));
            }
        }
    }
    build(n, &e, format!("random:n={n}"))
}

/// A generated graph with its optional distinguished vertex, edge or set.
#[derive(Debug, Clone)]
pub struct FamilyInstance {
    pub graph: Graph,
    pub vertex: Option<usize>,
    pub edge: Option<(usize, usize)>,
    pub set: Option<Vec<usize>>,
}

impl FamilyInstance {
    fn plain(graph: Graph) -> Self {
        FamilyInstance { graph, vertex: None, edge: None, set: None }
    }
}

/// Parsed family description such as `cycle:n=13`, `edge_gap:a=3` or
/// `multipartite:parts=1/2/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Multipartite { parts: Vec<usize> },
    Wheel { n: usize },
    Fan { n: usize },
    Petersen,
    Grid { m: usize, n: usize },
    SubdividedComplete { m: usize },
    Ternary { beta: usize },
    RatioH { m: usize },
    RatioG { m: usize },
    GridLattice { k: u32 },
    Vdeletion { a: usize },
    WheelDeletion { k: u32, x: usize },
    EdgeSharpness { a: usize, b: usize, c: usize },
    EdgeGap { a: usize },
}

pub const FAMILY_NAMES: &[&str] = &[
    "path",
    "cycle",
    "complete",
    "multipartite",
    "wheel",
    "fan",
    "petersen",
    "grid",
    "subdivided_complete",
    "ternary",
    "ratio_h",
    "ratio_g",
    "grid_lattice",
    "vdeletion",
    "wheel_deletion",
    "edge_sharpness",
    "edge_gap",
];

impl FamilySpec {
    /// Builds a spec from a family name and `key=value` parameters.
    pub fn from_parts(name: &str, params: &BTreeMap<String, String>) -> Result<FamilySpec> {
        let name = name.trim().to_ascii_lowercase().replace('-', "_");
        let get = |key: &str| -> Result<usize> {
            match params.get(key) {
                Some(v) => v.trim().parse().or_else(|_| input(format!("parameter {key}='{v}' is not an integer"))),
                None => input(format!("family '{name}' needs parameter {key}")),
            }
        };
        let expect = |keys: &[&str]| -> Result<()> {
            match params.keys().find(|p| !keys.contains(&p.as_str())) {
                Some(p) => input(format!("family '{name}' has no parameter '{p}'")),
                None => Ok(()),
            }
        };
        let k32 = |v: usize| u32::try_from(v).or_else(|_| input("k out of range"));
        let spec = match name.as_str() {
            "path" => FamilySpec::Path { n: get("n")? },
            "cycle" => FamilySpec::Cycle { n: get("n")? },
            "complete" => FamilySpec::Complete { n: get("n")? },
            "multipartite" => {
                let raw = params.get("parts").map(String::as_str).unwrap_or("");
                let parts = raw
                    .split(['/', ' '])
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>().or_else(|_| input(format!("bad part size '{s}'"))))
                    .collect::<Result<Vec<_>>>()?;
                if parts.is_empty() {
                    return input("multipartite needs parts=a/b/...");
                }
                expect(&["parts"])?;
                return Ok(FamilySpec::Multipartite { parts });
            }
            "wheel" => FamilySpec::Wheel { n: get("n")? },
            "fan" => FamilySpec::Fan { n: get("n")? },
            "petersen" => FamilySpec::Petersen,
            "grid" => FamilySpec::Grid { m: get("m")?, n: get("n")? },
            "subdivided_complete" => FamilySpec::SubdividedComplete { m: get("m")? },
            "ternary" => FamilySpec::Ternary { beta: get("beta")? },
            "ratio_h" => FamilySpec::RatioH { m: get("m")? },
            "ratio_g" => FamilySpec::RatioG { m: get("m")? },
            "grid_lattice" => FamilySpec::GridLattice { k: k32(get("k")?)? },
            "vdeletion" => FamilySpec::Vdeletion { a: get("a")? },
            "wheel_deletion" => FamilySpec::WheelDeletion { k: k32(get("k")?)?, x: get("x")? },
            "edge_sharpness" => FamilySpec::EdgeSharpness { a: get("a")?, b: get("b")?, c: get("c")? },
            "edge_gap" => FamilySpec::EdgeGap { a: get("a")? },
            other => return input(format!("unknown family '{other}' (known: {})", FAMILY_NAMES.join(", "))),
        };
        expect(spec.keys())?;
        Ok(spec)
    }

    fn keys(&self) -> &'static [&'static str] {
        match self {
            FamilySpec::Path { .. }
            | FamilySpec::Cycle { .. }
            | FamilySpec::Complete { .. }
            | FamilySpec::Wheel { .. }
            | FamilySpec::Fan { .. } => &["n"],
            FamilySpec::Multipartite { .. } => &["parts"],
            FamilySpec::Petersen => &[],
            FamilySpec::Grid { .. } => &["m", "n"],
            FamilySpec::SubdividedComplete { .. } | FamilySpec::RatioH { .. } | FamilySpec::RatioG { .. } => &["m"],
            FamilySpec::Ternary { .. } => &["beta"],
            FamilySpec::GridLattice { .. } => &["k"],
            FamilySpec::Vdeletion { .. } | FamilySpec::EdgeGap { .. } => &["a"],
            FamilySpec::WheelDeletion { .. } => &["k", "x"],
            FamilySpec::EdgeSharpness { .. } => &["a", "b", "c"],
        }
    }

    pub fn build(&self) -> Result<FamilyInstance> {
        let label = self.to_string();
        let mut inst = match self {
            FamilySpec::Path { n } => FamilyInstance::plain(path(*n)?),
            FamilySpec::Cycle { n } => FamilyInstance::plain(cycle(*n)?),
            FamilySpec::Complete { n } => FamilyInstance::plain(complete(*n)?),
            FamilySpec::Multipartite { parts } => FamilyInstance::plain(complete_multipartite(parts)?),
            FamilySpec::Wheel { n } => FamilyInstance::plain(wheel(*n)?),
            FamilySpec::Fan { n } => FamilyInstance::plain(fan(*n)?),
            FamilySpec::Petersen => FamilyInstance::plain(petersen()),
            FamilySpec::Grid { m, n } => FamilyInstance::plain(grid(*m, *n)?),
            FamilySpec::SubdividedComplete { m } => FamilyInstance::plain(subdivided_complete(*m)?),
            FamilySpec::Ternary { beta } => {
                let (g, s) = ternary_extremal(*beta)?;
                FamilyInstance { set: Some(s), ..FamilyInstance::plain(g) }
            }
            FamilySpec::RatioH { m } => FamilyInstance::plain(ratio_family(*m)?.h),
            FamilySpec::RatioG { m } => {
                let r = ratio_family(*m)?;
                FamilyInstance { set: Some(r.u), ..FamilyInstance::plain(r.g) }
            }
            FamilySpec::GridLattice { k } => {
                let (g, s) = grid_resolving_set(*k)?;
                FamilyInstance { set: Some(s), ..FamilyInstance::plain(g) }
            }
            FamilySpec::Vdeletion { a } => {
                let (g, v) = vdeletion_family(*a)?;
                FamilyInstance { vertex: Some(v), ..FamilyInstance::plain(g) }
            }
            FamilySpec::WheelDeletion { k, x } => {
                let (g, v) = wheel_deletion_instance(*k, *x)?;
                FamilyInstance { vertex: Some(v), ..FamilyInstance::plain(g) }
            }
            FamilySpec::EdgeSharpness { a, b, c } => {
                let (g, e) = edge_sharpness_family(*a, *b, *c)?;
                FamilyInstance { edge: Some(e), ..FamilyInstance::plain(g) }
            }
            FamilySpec::EdgeGap { a } => {
                let (g, e) = edge_gap_family(*a)?;
                FamilyInstance { edge: Some(e), ..FamilyInstance::plain(g) }
            }
        };
        inst.graph = inst.graph.with_label(label);
        Ok(inst)
    }

    pub fn graph(&self) -> Result<Graph> {
        Ok(self.build()?.graph)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path { n } => write!(f, "path:n={n}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:n={n}"),
            FamilySpec::Complete { n } => write!(f, "complete:n={n}"),
            FamilySpec::Multipartite { parts } => write!(f, "multipartite:parts={}", join_parts(parts)),
            FamilySpec::Wheel { n } => write!(f, "wheel:n={n}"),
            FamilySpec::Fan { n } => write!(f, "fan:n={n}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::Grid { m, n } => write!(f, "grid:m={m},n={n}"),
            FamilySpec::SubdividedComplete { m } => write!(f, "subdivided_complete:m={m}"),
            FamilySpec::Ternary { beta } => write!(f, "ternary:beta={beta}"),
            FamilySpec::RatioH { m } => write!(f, "ratio_h:m={m}"),
            FamilySpec::RatioG { m } => write!(f, "ratio_g:m={m}"),
            FamilySpec::GridLattice { k } => write!(f, "grid_lattice:k={k}"),
            FamilySpec::Vdeletion { a } => write!(f, "vdeletion:a={a}"),
            FamilySpec::WheelDeletion { k, x } => write!(f, "wheel_deletion:k={k},x={x}"),
            FamilySpec::EdgeSharpness { a, b, c } => write!(f, "edge_sharpness:a={a},b={b},c={c}"),
            FamilySpec::EdgeGap { a } => write!(f, "edge_gap:a={a}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let (name, rest) = s.split_once(':').unwrap_or((s, ""));
        let mut params = BTreeMap::new();
        for kv in rest.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            let Some((key, value)) = kv.split_once('=') else {
                return input(format!("expected key=value, got '{kv}'"));
            };
            if params.insert(key.trim().to_string(), value.trim().to_string()).is_some() {
                return input(format!("parameter '{}' given twice", key.trim()));
            }
        }
        FamilySpec::from_parts(name, &params)
    }
}
