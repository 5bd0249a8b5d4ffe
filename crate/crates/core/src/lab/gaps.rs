use serde::Serialize;

use crate::error::{input, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GapKind {
    Cycle,
    Path,
}

/// Run of non-members strictly after member `after` (in traversal order).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Gap {
    pub size: usize,
    pub after: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapProfile {
    pub kind: GapKind,
    pub n: usize,
    /// Cycle: one gap per member. Path: the interior gaps only.
    pub gaps: Vec<Gap>,
    pub initial: Option<usize>,
    pub terminal: Option<usize>,
    pub union_gap: Option<usize>,
}

/// Gaps of `m` on `C_n` or `P_n` with vertices `0..n` in traversal order.
pub fn gap_profile(kind: GapKind, n: usize, m: &[usize]) -> Result<GapProfile> {
    let mut m = m.to_vec();
    m.sort_unstable();
    m.dedup();
    if m.len() < 2 {
        return input("gap profile needs at least two vertices");
    }
    if let Some(&v) = m.iter().find(|&&v| v >= n) {
        return input(format!("vertex {v} out of range for n={n}"));
    }
    let r = m.len();
    Ok(match kind {
        GapKind::Cycle => GapProfile {
            kind,
            n,
            gaps: (0..r).map(|i| Gap { size: (m[(i + 1) % r] + n - m[i] - 1) % n, after: m[i] }).collect(),
            initial: None,
            terminal: None,
            union_gap: None,
        },
        GapKind::Path => {
            let initial = m[0];
            let terminal = n - 1 - m[r - 1];
            GapProfile {
                kind,
                n,
                gaps: (0..r - 1).map(|i| Gap { size: m[i + 1] - m[i] - 1, after: m[i] }).collect(),
                initial: Some(initial),
                terminal: Some(terminal),
                union_gap: Some(initial + terminal),
            }
        }
    })
}

impl GapProfile {
    /// Clauses of the gap structure of minimum distance-`k` resolving sets
    /// that this profile breaks; empty when all hold.
    pub fn violations(&self, k: u32) -> Vec<&'static str> {
        let k = k as usize;
        let sizes: Vec<usize> = self.gaps.iter().map(|g| g.size).collect();
        let mut out = Vec::new();
        if sizes.iter().any(|&s| s > 2 * k + 1) {
            out.push("gap larger than 2k+1");
        }
        if sizes.iter().filter(|&&s| s == 2 * k + 1).count() > 1 {
            out.push("more than one gap of 2k+1");
        }
        let r = sizes.len();
        let cyclic = self.kind == GapKind::Cycle;
        let large_next_to_large = (0..r).any(|i| {
            if sizes[i] <= k {
                return false;
            }
            let mut nbrs = Vec::new();
            if cyclic {
                nbrs.extend([(i + r - 1) % r, (i + 1) % r]);
            } else {
                if i > 0 {
                    nbrs.push(i - 1);
                }
                if i + 1 < r {
                    nbrs.push(i + 1);
                }
            }
            nbrs.into_iter().any(|j| j != i && sizes[j] > k)
        });
        if large_next_to_large {
            out.push("gap above k next to a gap above k");
        }
        if let (Some(init), Some(term), Some(union)) = (self.initial, self.terminal, self.union_gap) {
            if init > k + 1 || term > k + 1 {
                out.push("end gap larger than k+1");
            }
            if union > 2 * k + 1 {
                out.push("union gap larger than 2k+1");
            }
            if union == 2 * k + 1 && sizes.contains(&(2 * k + 1)) {
                out.push("both a 2k+1 gap and a 2k+1 union gap");
            }
            if (init >= 1 && sizes.first().is_some_and(|&s| s > k)) || (term >= 1 && sizes.last().is_some_and(|&s| s > k)) {
                out.push("nonempty end gap next to a gap above k");
            }
        }
        out
    }
}
