//! Canonical forms for small hypergraphs.
//!
//! The canonical form is the lexicographically least sorted edge list among
//! all relabelings that respect the refined vertex ordering: vertices are first
//! ordered by a color refinement seeded with degrees (and any caller colors),
//! and ties are broken by individualizing every candidate in turn. Vertices
//! whose transposition is an automorphism ("twins") are only individualized
//! once per cell, which collapses isolated vertices and symmetric pendants.
//! The search is exponential in the worst case and gated by
//! [`CANON_MAX_VERTICES`].

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

pub const CANON_MAX_VERTICES: usize = 24;

/// Canonical form together with the relabeling that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalLabeling {
    pub form: UniformHypergraph,
    /// `labeling[old] = new`.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(h: &UniformHypergraph) -> Result<UniformHypergraph> {
    canonical_labeling(h).map(|c| c.form)
}

pub fn canonical_labeling(h: &UniformHypergraph) -> Result<CanonicalLabeling> {
    canonical_labeling_colored(h, &vec![0; h.n()])
}

/// Canonical labeling for a vertex-colored hypergraph. Only relabelings that
/// map each color class onto itself are considered equivalent; lower color
/// values receive lower labels.
pub fn canonical_labeling_colored(
    h: &UniformHypergraph,
    colors: &[u32],
) -> Result<CanonicalLabeling> {
    let n = h.n();
    if n > CANON_MAX_VERTICES {
        return Err(Error::CapacityExceeded {
            what: "canonical labeling vertex count",
            limit: CANON_MAX_VERTICES,
        });
    }
    if colors.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: colors.len(),
        });
    }
    let search = Search::new(h, colors);
    let labeling = search.run();
    let form = h.relabel(&labeling)?;
    Ok(CanonicalLabeling { form, labeling })
}

/// Isomorphism test by comparing canonical forms.
pub fn is_isomorphic(a: &UniformHypergraph, b: &UniformHypergraph) -> Result<bool> {
    if a.r() != b.r() || a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    let (mut da, mut db) = (a.degrees(), b.degrees());
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

struct Search<'a> {
    h: &'a UniformHypergraph,
    incidence: Vec<Vec<usize>>,
    initial: Vec<u32>,
    twin_class: Vec<usize>,
    best_keys: Option<Vec<u64>>,
    best_labeling: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(h: &'a UniformHypergraph, colors: &[u32]) -> Self {
        let incidence = h.incidence();
        let twin_class = twin_classes(h, colors);
        Self {
            h,
            incidence,
            initial: colors.to_vec(),
            twin_class,
            best_keys: None,
            best_labeling: (0..h.n()).collect(),
        }
    }

    fn run(mut self) -> Vec<usize> {
        if self.h.n() == 0 {
            return Vec::new();
        }
        let degrees = self.h.degrees();
        // Seed: caller color first, then degree descending.
        let seed: Vec<(u32, usize)> = (0..self.h.n())
            .map(|v| (self.initial[v], usize::MAX - degrees[v]))
            .collect();
        let colors = rank(&seed);
        self.descend(colors);
        self.best_labeling
    }

    fn descend(&mut self, colors: Vec<u32>) {
        let colors = self.refine(colors);
        let n = self.h.n();
        let mut counts = vec![0usize; n];
        for &c in &colors {
            counts[c as usize] += 1;
        }
        let Some(target) = counts.iter().position(|&c| c > 1) else {
            self.leaf(&colors);
            return;
        };
        let mut tried_classes: Vec<usize> = Vec::new();
        for v in 0..n {
            if colors[v] as usize != target || tried_classes.contains(&self.twin_class[v]) {
                continue;
            }
            tried_classes.push(self.twin_class[v]);
            let split: Vec<u32> = colors
                .iter()
                .enumerate()
                .map(|(x, &c)| 2 * c + u32::from(c as usize == target && x != v))
                .collect();
            self.descend(split);
        }
    }

    /// Iterated color refinement. Colors are ranks `0..k`; the previous color
    /// is the primary sort key, so refinement never reorders existing cells.
    fn refine(&self, mut colors: Vec<u32>) -> Vec<u32> {
        let n = self.h.n();
        let mut cells = distinct(&colors);
        loop {
            let sigs: Vec<Vec<u32>> = (0..n)
                .map(|v| {
                    let mut per_edge: Vec<Vec<u32>> = self.incidence[v]
                        .iter()
                        .map(|&ei| {
                            let mut cs: Vec<u32> = self
                                .h
                                .edge(ei)
                                .iter()
                                .filter(|&&u| u != v)
                                .map(|&u| colors[u])
                                .collect();
                            cs.sort_unstable();
                            cs
                        })
                        .collect();
                    per_edge.sort_unstable();
                    let mut sig = vec![colors[v]];
                    for cs in per_edge {
                        sig.extend(cs);
                    }
                    sig
                })
                .collect();
            colors = rank(&sigs);
            let next = distinct(&colors);
            if next == cells {
                return colors;
            }
            cells = next;
        }
    }

    fn leaf(&mut self, labeling: &[u32]) {
        // Sorted tuples in ascending lexicographic order correspond to these
        // keys in descending numeric order.
        let mut keys: Vec<u64> = self
            .h
            .edges()
            .map(|e| {
                e.iter()
                    .fold(0u64, |k, &v| k | 1u64 << (63 - labeling[v] as usize))
            })
            .collect();
        keys.sort_unstable_by(|a, b| b.cmp(a));
        let better = match &self.best_keys {
            None => true,
            Some(best) => keys > *best,
        };
        if better {
            self.best_keys = Some(keys);
            self.best_labeling = labeling.iter().map(|&c| c as usize).collect();
        }
    }
}

fn distinct(colors: &[u32]) -> usize {
    let mut seen: Vec<u32> = colors.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// Dense ranks of `keys` in sorted order.
fn rank<K: Ord>(keys: &[K]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    let mut out = vec![0u32; keys.len()];
    let mut r = 0u32;
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && keys[order[i - 1]] != keys[v] {
            r += 1;
        }
        out[v] = r;
    }
    out
}

/// Classes of vertices whose pairwise transpositions are color-preserving
/// automorphisms. Transposition-twinness is an equivalence relation.
fn twin_classes(h: &UniformHypergraph, colors: &[u32]) -> Vec<usize> {
    let n = h.n();
    let mut masks: Vec<u64> = h
        .edges()
        .map(|e| e.iter().fold(0u64, |m, &v| m | 1 << v))
        .collect();
    masks.sort_unstable();
    let is_twin = |u: usize, v: usize| {
        colors[u] == colors[v]
            && masks.iter().all(|&m| {
                let (hu, hv) = (m >> u & 1, m >> v & 1);
                if hu == hv {
                    return true;
                }
                let swapped = m ^ (1 << u) ^ (1 << v);
                masks.binary_search(&swapped).is_ok()
            })
    };
    let mut class = vec![usize::MAX; n];
    for u in 0..n {
        if class[u] != usize::MAX {
            continue;
        }
        class[u] = u;
        for v in u + 1..n {
            if class[v] == usize::MAX && is_twin(u, v) {
                class[v] = u;
            }
        }
    }
    class
}
