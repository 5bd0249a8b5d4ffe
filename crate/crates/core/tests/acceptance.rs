//! End-to-end acceptance checks. Prints one line per criterion and exits
//! nonzero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use kdim::enumerate::enumerate_connected;
use kdim::families::{
    complete_multipartite, cycle, edge_gap_family, edge_sharpness_family, fan, grid, grid_resolving_set, path,
    petersen, random_connected, ratio_family, ternary_extremal, vdeletion_family, wheel,
};
use kdim::formulas::{
    classify_extreme, dim_k_cycle, dim_k_fan, dim_k_multipartite, dim_k_path, dim_k_wheel, wheel_deletion_delta,
    ExtremeClass, JoinFamily,
};
use kdim::io::to_graph6;
use kdim::lab::{check_gap_lemma_cycle, check_gap_lemma_path, deletion_experiment, Deletion};
use kdim::solver::{is_resolving, max_order, solve_dim, solve_dim_k, SolveOptions};
use kdim::{Graph, Result};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<Vec<String>>;

fn dim(g: &Graph, k: u32) -> Result<usize> {
    Ok(solve_dim_k(g, k, SolveOptions::default())?.dim)
}

fn expect<T: PartialEq + std::fmt::Debug>(bad: &mut Vec<String>, what: impl FnOnce() -> String, want: T, got: T) {
    if want != got {
        bad.push(format!("{}: expected {want:?}, got {got:?}", what()));
    }
}

fn paths_and_cycles() -> Check {
    let mut bad = Vec::new();
    for k in 1..=4 {
        for n in 2..=16 {
            expect(&mut bad, || format!("P_{n} k={k}"), dim_k_path(n, k)?.value, dim(&path(n)?, k)?);
        }
        for n in 3..=16 {
            expect(&mut bad, || format!("C_{n} k={k}"), dim_k_cycle(n, k)?.value, dim(&cycle(n)?, k)?);
        }
    }
    Ok(bad)
}

fn wheels_and_fans() -> Check {
    let mut bad = Vec::new();
    for k in 1..=3 {
        for n in 3..=11 {
            expect(&mut bad, || format!("wheel {n} k={k}"), dim_k_wheel(n, k)?.value, dim(&wheel(n)?, k)?);
        }
        for n in 1..=11 {
            expect(&mut bad, || format!("fan {n} k={k}"), dim_k_fan(n, k)?.value, dim(&fan(n)?, k)?);
        }
    }
    Ok(bad)
}

fn part_lists(total: usize) -> Vec<Vec<usize>> {
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
    rec(total, total, &mut Vec::new(), &mut out);
    out
}

fn multipartite() -> Check {
    let mut bad = Vec::new();
    let lists = part_lists(9);
    for k in 1..=3 {
        for parts in &lists {
            let g = complete_multipartite(parts)?;
            expect(&mut bad, || format!("{parts:?} k={k}"), dim_k_multipartite(parts, k)?.value, dim(&g, k)?);
        }
    }
    Ok(bad)
}

fn petersen_values() -> Check {
    let mut bad = Vec::new();
    for k in 1..=3 {
        expect(&mut bad, || format!("k={k}"), 3, dim(&petersen(), k)?);
    }
    Ok(bad)
}

fn characterization() -> Check {
    let mut bad = Vec::new();
    for n in 4..=6 {
        let graphs = enumerate_connected(n)?;
        for k in 1..=3 {
            let mut by_dim = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
            let mut by_class = (BTreeSet::new(), BTreeSet::new(), BTreeSet::new());
            let mut p4_listed = false;
            for g in &graphs {
                let code = to_graph6(g);
                let d = dim(g, k)?;
                if d == n - 2 {
                    by_dim.0.insert(code.clone());
                }
                if d == n - 1 {
                    by_dim.1.insert(code.clone());
                }
                if d == 1 {
                    by_dim.2.insert(code.clone());
                }
                match classify_extreme(g, k)? {
                    ExtremeClass::NMinusTwo(j) => {
                        p4_listed |= j == JoinFamily::P4Special;
                        by_class.0.insert(code.clone());
                    }
                    ExtremeClass::NMinusOne if g.is_complete() => {
                        by_class.1.insert(code.clone());
                    }
                    ExtremeClass::DimOne(m) if g.is_path() && m <= k as usize + 2 => {
                        by_class.2.insert(code);
                    }
                    _ => {}
                }
            }
            expect(&mut bad, || format!("n={n} k={k} dim=n-2"), &by_class.0, &by_dim.0);
            expect(&mut bad, || format!("n={n} k={k} dim=n-1"), &by_class.1, &by_dim.1);
            expect(&mut bad, || format!("n={n} k={k} dim=1"), &by_class.2, &by_dim.2);
            expect(&mut bad, || format!("n={n} k={k} P_4 listed"), n == 4 && k == 1, p4_listed);
        }
    }
    Ok(bad)
}

fn gap_lemmas() -> Check {
    let mut bad = Vec::new();
    for k in 1..=3u32 {
        let kk = k as usize;
        for n in 2 * kk + 3..=14 {
            for r in check_gap_lemma_cycle(n, k)?.failures() {
                bad.push(format!("{} {} ({})", r.id, r.observed, r.note));
            }
        }
        for n in kk + 3..=14 {
            for r in check_gap_lemma_path(n, k)?.failures() {
                bad.push(format!("{} {} ({})", r.id, r.observed, r.note));
            }
        }
    }
    Ok(bad)
}

fn bounds_audit() -> Check {
    let mut bad = Vec::new();
    for i in 0..200u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(0xB0_0000 + i);
        let n = rng.gen_range(4..=9);
        let k = rng.gen_range(1..=3);
        let g = random_connected(n, rng.gen_range(0.1..0.6), &mut rng)?;
        let c = solve_dim_k(&g, k, SolveOptions::default())?;
        let b = &c.bounds;
        let upper = b.diameter.unwrap().min(b.refined.unwrap());
        let ok = b.twin <= c.dim && c.dim <= upper && n as u128 <= max_order(k, c.dim as u32);
        if !ok {
            bad.push(format!("trial {i}: n={n} k={k} dim={} bounds={b:?}", c.dim));
        }
    }
    Ok(bad)
}

fn extremal_constructions() -> Check {
    let mut bad = Vec::new();
    for beta in 1..=3usize {
        let (g, s) = ternary_extremal(beta)?;
        expect(&mut bad, || format!("ternary beta={beta} order"), beta + 3usize.pow(beta as u32), g.order());
        expect(&mut bad, || format!("ternary beta={beta} set resolves"), true, is_resolving(&g, &s, 2));
        let d = solve_dim_k(&g, 2, SolveOptions::disconnected())?.dim;
        expect(&mut bad, || format!("ternary beta={beta} dim_2"), beta, d);
    }
    for beta in 1..=6u32 {
        expect(&mut bad, || format!("max_order(1,{beta})"), beta as u128 + (1u128 << beta), max_order(1, beta));
    }
    Ok(bad)
}

fn grid_construction() -> Check {
    let mut bad = Vec::new();
    let (g, s) = grid_resolving_set(3)?;
    expect(&mut bad, || "9x9 lattice resolves".into(), true, is_resolving(&g, &s, 3));
    if s.len() > 41 {
        bad.push(format!("lattice has {} > 41 vertices", s.len()));
    }
    for (m, n) in [(3, 4), (4, 4)] {
        expect(&mut bad, || format!("dim grid({m},{n})"), 2, solve_dim(&grid(m, n)?, SolveOptions::default())?.dim);
    }
    Ok(bad)
}

fn deletion_families() -> Check {
    let mut bad = Vec::new();
    let edge = |bad: &mut Vec<String>, label: String, g: &Graph, e: (usize, usize), k: u32, want: (usize, usize)| -> Result<()> {
        let o = deletion_experiment(g, Deletion::Edge(e.0, e.1), k)?;
        expect(bad, || format!("{label} k={k}"), (want.0, Some(want.1)), (o.before, o.after));
        Ok(())
    };
    let (g, e) = edge_sharpness_family(3, 2, 3)?;
    edge(&mut bad, "edge_sharpness(3,2,3)".into(), &g, e, 3, (3, 5))?;
    edge(&mut bad, "edge_sharpness(3,2,3)".into(), &g, e, 2, (4, 5))?;
    for a in 2..=3 {
        let (g, e) = edge_gap_family(a)?;
        for k in 2..=3 {
            edge(&mut bad, format!("edge_gap({a})"), &g, e, k, (2 * a, a + 1))?;
        }
        let (g, v) = vdeletion_family(a)?;
        for k in 1..=2 {
            let o = deletion_experiment(&g, Deletion::Vertex(v), k)?;
            expect(&mut bad, || format!("vdeletion({a}) k={k}"), (a + 1, Some(2 * a)), (o.before, o.after));
        }
    }
    let mut trials = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0xDE1E7E);
    while trials < 100 {
        let n = rng.gen_range(4..=9);
        let g = random_connected(n, rng.gen_range(0.15..0.6), &mut rng)?;
        let edges = g.edges();
        let (u, v) = edges[rng.gen_range(0..edges.len())];
        let k = 1 + trials % 3;
        let o = deletion_experiment(&g, Deletion::Edge(u, v), k)?;
        if o.skipped() {
            continue;
        }
        trials += 1;
        if o.within_bounds != Some(true) {
            bad.push(format!("random trial {trials}: k={k} delta={:?} g6={}", o.delta, to_graph6(&g)));
        }
    }
    Ok(bad)
}

fn wheel_deletion() -> Check {
    let mut bad = Vec::new();
    for k in 2..=3u32 {
        expect(&mut bad, || format!("k={k} x=1"), 6 * (k as i64 - 1), wheel_deletion_delta(k, 1)?);
    }
    Ok(bad)
}

fn ratio() -> Check {
    let mut bad = Vec::new();
    let r = ratio_family(3)?;
    for k in 1..=2 {
        expect(&mut bad, || format!("dim_{k}(H)"), 5, dim(&r.h, k)?);
        expect(&mut bad, || format!("u resolves at k={k}"), true, is_resolving(&r.g, &r.u, k));
        let d = dim(&r.g, k)?;
        if d > 3 {
            bad.push(format!("dim_{k}(G) = {d} > 3"));
        }
    }
    Ok(bad)
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 12] = [
        ("paths and cycles match closed forms (n<=16, k<=4)", paths_and_cycles),
        ("wheels and fans match closed forms (n<=11, k<=3)", wheels_and_fans),
        ("complete multipartite graphs match closed form (n<=9, k<=3)", multipartite),
        ("Petersen graph has dim_k = 3 (k<=3)", petersen_values),
        ("extreme-value characterization on orders 4..6 (k<=3)", characterization),
        ("gap structure of every minimum set of C_n and P_n (n<=14, k<=3)", gap_lemmas),
        ("bounds audit on 200 seeded random graphs", bounds_audit),
        ("ternary extremal graphs and max_order(1, beta)", extremal_constructions),
        ("grid lattice set and grid metric dimension", grid_construction),
        ("deletion families and 100 random edge deletions", deletion_families),
        ("wheel hub deletion arithmetic", wheel_deletion),
        ("clique ratio family (m=3, k<=2)", ratio),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(bad) if bad.is_empty() => println!("[PASS] criterion {:>2}: {name} ({ms} ms)", i + 1),
            Ok(bad) => {
                failed += 1;
                println!("[FAIL] criterion {:>2}: {name} ({ms} ms)", i + 1);
                for b in bad.iter().take(10) {
                    println!("         {b}");
                }
            }
            Err(e) => {
                failed += 1;
                println!("[FAIL] criterion {:>2}: {name}: error {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
