//! Branch-and-bound minimum hitting set over distinguishing sets.
//!
//! The instance is first reduced to its inclusion-minimal sets: a resolving
//! set hits a superset whenever it hits the subset. Two searches share it:
//!
//! * [`BranchAndBound`] finds the optimum size. It branches on the unhit set
//!   with the fewest available vertices, including its members one at a time
//!   in ascending order and excluding each after its subtree is done.
//! * [`LexSearch`] walks candidate sets in lexicographic order at a fixed
//!   cardinality; its first hit is the canonical certificate, and it can also
//!   list every hitting set of that size.
//!
//! Both prune with a greedy packing of pairwise disjoint available sets.

use crate::bitset::VertexSet;

#[derive(Debug, Clone)]
pub(crate) struct HittingSetInstance {
    n: usize,
    sets: Vec<VertexSet>,
}

impl HittingSetInstance {
    pub(crate) fn new<'a>(n: usize, sets: impl IntoIterator<Item = &'a VertexSet>) -> Self {
        let mut all: Vec<VertexSet> = sets.into_iter().cloned().collect();
        all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        all.dedup();
        let mut minimal: Vec<VertexSet> = Vec::with_capacity(all.len());
        for s in all {
            if !minimal.iter().any(|m| m.is_subset(&s)) {
                minimal.push(s);
            }
        }
        HittingSetInstance { n, sets: minimal }
    }

    #[cfg(test)]
    pub(crate) fn len(&self) -> usize {
        self.sets.len()
    }

    /// Greedy packing lower bound over the sets in `unhit`, restricted to
    /// vertices outside `excluded`.
    fn packing_bound(&self, unhit: &[(usize, usize)], excluded: &VertexSet) -> usize {
        let mut order: Vec<(usize, usize)> = unhit.to_vec();
        order.sort_unstable();
        let mut used = excluded.clone();
        let mut count = 0;
        for &(_, i) in &order {
            if self.sets[i].difference_len(&used) == self.sets[i].difference_len(excluded) {
                count += 1;
                used.union_with(&self.sets[i]);
            }
        }
        count
    }

    /// `(available size, index)` of every set not hit by `chosen`, or `None`
    /// if one of them has no available vertex left.
    fn unhit(&self, chosen: &VertexSet, excluded: &VertexSet) -> Option<Vec<(usize, usize)>> {
        let mut out = Vec::new();
        for (i, s) in self.sets.iter().enumerate() {
            if !s.intersects(chosen) {
                let avail = s.difference_len(excluded);
                if avail == 0 {
                    return None;
                }
                out.push((avail, i));
            }
        }
        Some(out)
    }

    pub(crate) fn root_lower_bound(&self) -> usize {
        let empty = VertexSet::new(self.n);
        let unhit: Vec<(usize, usize)> = self.sets.iter().enumerate().map(|(i, s)| (s.len(), i)).collect();
        self.packing_bound(&unhit, &empty)
    }

    #[cfg(test)]
    pub(crate) fn is_hit_by(&self, set: &VertexSet) -> bool {
        self.sets.iter().all(|s| s.intersects(set))
    }
}

pub(crate) struct BranchAndBound<'a> {
    inst: &'a HittingSetInstance,
    best: VertexSet,
    lower: usize,
    budget: Option<u64>,
    pub(crate) nodes: u64,
    pub(crate) exhausted: bool,
}

impl<'a> BranchAndBound<'a> {
    pub(crate) fn new(inst: &'a HittingSetInstance, incumbent: VertexSet, lower: usize, budget: Option<u64>) -> Self {
        BranchAndBound { inst, best: incumbent, lower, budget, nodes: 0, exhausted: false }
    }

    /// Runs to completion (or budget exhaustion) and returns the incumbent.
    pub(crate) fn run(mut self) -> (VertexSet, u64, bool) {
        let n = self.inst.n;
        let mut chosen = VertexSet::new(n);
        let mut excluded = VertexSet::new(n);
        self.branch(&mut chosen, &mut excluded, 0);
        (self.best, self.nodes, self.exhausted)
    }

    fn branch(&mut self, chosen: &mut VertexSet, excluded: &mut VertexSet, size: usize) {
        if self.exhausted || self.best.len() <= self.lower {
            return;
        }
        self.nodes += 1;
        if self.budget.is_some_and(|b| self.nodes > b) {
            self.exhausted = true;
            return;
        }
        let Some(unhit) = self.inst.unhit(chosen, excluded) else {
            return;
        };
        if unhit.is_empty() {
            if size < self.best.len() {
                self.best = chosen.clone();
            }
            return;
        }
        if size + self.inst.packing_bound(&unhit, excluded) >= self.best.len() {
            return;
        }
        let &(_, pick) = unhit.iter().min().expect("nonempty");
        let candidates: Vec<usize> = self.inst.sets[pick].iter().filter(|&v| !excluded.contains(v)).collect();
        for &v in &candidates {
            chosen.insert(v);
            self.branch(chosen, excluded, size + 1);
            chosen.remove(v);
            excluded.insert(v);
        }
        for &v in &candidates {
            excluded.remove(v);
        }
    }
}

/// Lexicographic enumeration of hitting sets of a fixed size.
pub(crate) struct LexSearch<'a> {
    inst: &'a HittingSetInstance,
    /// `below[i]` holds the vertices `0..i`.
    below: Vec<VertexSet>,
    target: usize,
    collect_all: bool,
    found: Vec<VertexSet>,
}

impl<'a> LexSearch<'a> {
    pub(crate) fn new(inst: &'a HittingSetInstance, target: usize, collect_all: bool) -> Self {
        let n = inst.n;
        let mut below = Vec::with_capacity(n + 1);
        let mut acc = VertexSet::new(n);
        below.push(acc.clone());
        for v in 0..n {
            acc.insert(v);
            below.push(acc.clone());
        }
        LexSearch { inst, below, target, collect_all, found: Vec::new() }
    }

    pub(crate) fn run(mut self) -> Vec<VertexSet> {
        let mut chosen = VertexSet::new(self.inst.n);
        self.step(0, &mut chosen, 0);
        self.found
    }

    /// Returns `true` to stop the whole search.
    fn step(&mut self, start: usize, chosen: &mut VertexSet, size: usize) -> bool {
        let excluded = &self.below[start];
        let Some(unhit) = self.inst.unhit(chosen, excluded) else {
            return false;
        };
        if unhit.is_empty() {
            if size == self.target {
                self.found.push(chosen.clone());
                return !self.collect_all;
            }
            // Only reachable when `target` exceeds the optimum.
            return false;
        }
        if size == self.target || size + self.inst.packing_bound(&unhit, excluded) > self.target {
            return false;
        }
        // The next chosen vertex may not pass the last available vertex of
        // any unhit set.
        let limit = unhit
            .iter()
            .map(|&(_, i)| self.inst.sets[i].last().expect("nonempty"))
            .min()
            .expect("nonempty");
        for v in start..=limit {
            chosen.insert(v);
            let stop = self.step(v + 1, chosen, size + 1);
            chosen.remove(v);
            if stop {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(n: usize, sets: &[&[usize]]) -> HittingSetInstance {
        let owned: Vec<VertexSet> = sets.iter().map(|s| VertexSet::from_vertices(n, s.iter().copied())).collect();
        HittingSetInstance::new(n, owned.iter())
    }

    #[test]
    fn reduction_keeps_minimal_sets() {
        let i = inst(4, &[&[0, 1], &[0, 1, 2], &[2, 3], &[0, 1]]);
        assert_eq!(i.len(), 2);
        assert_eq!(i.root_lower_bound(), 2);
    }

    #[test]
    fn branch_and_bound_finds_optimum() {
        // Triangle edges as sets: optimum 2.
        let i = inst(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let (best, _, exhausted) = BranchAndBound::new(&i, VertexSet::full(3), 1, None).run();
        assert!(!exhausted);
        assert_eq!(best.len(), 2);
        assert!(i.is_hit_by(&best));
    }

    #[test]
    fn lex_search_lists_all_in_order() {
        let i = inst(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let all: Vec<Vec<usize>> = LexSearch::new(&i, 2, true).run().iter().map(|s| s.to_vec()).collect();
        assert_eq!(all, vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let first = LexSearch::new(&i, 2, false).run();
        assert_eq!(first.len(), 1);
        assert_eq!(first[0].to_vec(), vec![0, 1]);
    }
}
