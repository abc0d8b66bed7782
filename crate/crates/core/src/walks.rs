//! k-walk counting.
//!
//! A k-walk is `v1 e1 v2 ... vk ek v(k+1)` with `vi != v(i+1)` and
//! `{vi, v(i+1)} ⊆ ei`. Nothing else is constrained: vertices and edges may
//! repeat, including the same edge on consecutive steps.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

/// What to do when a walk count no longer fits in 128 bits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OverflowPolicy {
    #[default]
    Error,
    Saturate,
}

/// Walk counts of a fixed length from one source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct WalkTable {
    pub source: usize,
    pub length: usize,
    /// `counts[v]` is the number of walks from `source` ending at `v`.
    pub counts: Vec<u128>,
    pub total: u128,
}

/// Counts all k-walks starting at `u`, erroring on overflow.
pub fn count_walks(h: &UniformHypergraph, u: usize, k: usize) -> Result<WalkTable> {
    count_walks_with(h, u, k, OverflowPolicy::Error)
}

pub fn count_walks_with(
    h: &UniformHypergraph,
    u: usize,
    k: usize,
    policy: OverflowPolicy,
) -> Result<WalkTable> {
    h.check_vertex(u)?;
    let inc = h.incidence();
    let add = |a: u128, b: u128, step: usize| -> Result<u128> {
        match (a.checked_add(b), policy) {
            (Some(s), _) => Ok(s),
            (None, OverflowPolicy::Saturate) => Ok(u128::MAX),
            (None, OverflowPolicy::Error) => Err(Error::Overflow(step)),
        }
    };

    let mut counts = vec![0u128; h.n()];
    counts[u] = 1;
    for step in 1..=k {
        let mut next = vec![0u128; h.n()];
        for (x, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &ei in &inc[x] {
                for &y in h.edge(ei) {
                    if y != x {
                        next[y] = add(next[y], c, step)?;
                    }
                }
            }
        }
        counts = next;
    }
    let mut total = 0u128;
    for &c in &counts {
        total = add(total, c, k)?;
    }
    Ok(WalkTable {
        source: u,
        length: k,
        counts,
        total,
    })
}

/// `w_k(v)` for every vertex.
pub fn walk_totals(h: &UniformHypergraph, k: usize) -> Result<Vec<u128>> {
    (0..h.n())
        .map(|v| count_walks(h, v, k).map(|t| t.total))
        .collect()
}
