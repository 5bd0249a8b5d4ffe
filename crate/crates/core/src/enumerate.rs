//! One representative per isomorphism class of small connected graphs.
//!
//! Graphs of order `n` are grown from all graphs of order `n - 1` by adding a
//! vertex with every possible neighborhood, then deduplicated by a canonical
//! code: colour refinement orders the vertices into cells and every
//! permutation within the cells is tried, keeping the smallest adjacency code.

use std::collections::BTreeSet;

use crate::error::{input, Result};
use crate::graph::Graph;

pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Upper-triangle adjacency code, bit `(u, v)` ordered column by column.
type Code = u64;

fn code_under(g: &Graph, perm: &[usize]) -> Code {
    let n = g.order();
    let mut code = 0u64;
    for v in 1..n {
        for u in 0..v {
            code = (code << 1) | g.has_edge(perm[u], perm[v]) as u64;
        }
    }
    code
}

fn from_code(n: usize, code: Code) -> Graph {
    let nbits = n * (n - 1) / 2;
    let mut g = Graph::empty(n);
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if code >> (nbits - 1 - idx) & 1 == 1 {
                g.set_edge(u, v, true);
            }
            idx += 1;
        }
    }
    g
}

/// Ordered cells of the stable colouring reached from the degree partition.
fn refined_cells(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|w| colour[w]).collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let distinct: BTreeSet<&(usize, Vec<usize>)> = sigs.iter().collect();
        let ranked: Vec<&(usize, Vec<usize>)> = distinct.into_iter().collect();
        let next: Vec<usize> = sigs.iter().map(|s| ranked.binary_search(&s).unwrap()).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = ranked.len();
        colour = next;
        if after == before {
            break;
        }
    }
    let ncol = colour.iter().max().map_or(0, |&c| c + 1);
    let mut cells = vec![Vec::new(); ncol];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    cells.retain(|c| !c.is_empty());
    cells
}

/// Smallest code over all vertex orders that respect the refined cells.
pub fn canonical_code(g: &Graph) -> u64 {
    let cells = refined_cells(g);
    let mut perm = Vec::with_capacity(g.order());
    let mut best = u64::MAX;
    search_cells(g, &cells, 0, &mut perm, &mut best);
    best
}

fn search_cells(g: &Graph, cells: &[Vec<usize>], depth: usize, perm: &mut Vec<usize>, best: &mut u64) {
    if depth == cells.len() {
        *best = (*best).min(code_under(g, perm));
        return;
    }
    let mut cell = cells[depth].clone();
    permute(&mut cell, 0, &mut |p| {
        let len = perm.len();
        perm.extend_from_slice(p);
        search_cells(g, cells, depth + 1, perm, best);
        perm.truncate(len);
    });
}

fn permute(items: &mut [usize], i: usize, f: &mut dyn FnMut(&[usize])) {
    if i == items.len() {
        f(items);
        return;
    }
    for j in i..items.len() {
        items.swap(i, j);
        permute(items, i + 1, f);
        items.swap(i, j);
    }
}

/// Canonical representative of `g`'s isomorphism class.
pub fn canonical_form(g: &Graph) -> Graph {
    from_code(g.order(), canonical_code(g))
}

fn all_graphs(n: usize) -> BTreeSet<Code> {
    if n == 1 {
        return BTreeSet::from([0]);
    }
    let mut out = BTreeSet::new();
    for code in all_graphs(n - 1) {
        let base = from_code(n - 1, code);
        for mask in 0u32..(1 << (n - 1)) {
            let mut g = Graph::empty(n);
            for (u, v) in base.edges() {
                g.set_edge(u, v, true);
            }
            for u in 0..n - 1 {
                if mask >> u & 1 == 1 {
                    g.set_edge(u, n - 1, true);
                }
            }
            out.insert(canonical_code(&g));
        }
    }
    out
}

/// Connected graphs of order `n` up to isomorphism, ordered by canonical code.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return input(format!("enumeration order must lie in 1..={MAX_ENUMERATION_ORDER}, got {n}"));
    }
    Ok(all_graphs(n)
        .into_iter()
        .map(|c| from_code(n, c))
        .filter(Graph::is_connected)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_for_small_orders() {
        let counts: Vec<usize> = (1..=5).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(enumerate_connected(0).is_err());
        assert!(enumerate_connected(8).is_err());
    }

    #[test]
    fn canonical_form_identifies_relabelled_paths() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_code(&a), canonical_code(&b));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_code(&a), canonical_code(&star));
    }
}
