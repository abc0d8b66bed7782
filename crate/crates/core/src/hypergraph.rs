//! The r-uniform hypergraph data model.
//!
//! Vertices are dense ids `0..n`. Edges are stored flat, each edge sorted and
//! the edge list sorted lexicographically, so two hypergraphs are equal exactly
//! when their fields are equal.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An r-uniform hypergraph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct UniformHypergraph {
    r: usize,
    n: usize,
    edges: Vec<usize>,
}

/// Result of [`UniformHypergraph::induced`] and [`UniformHypergraph::cross`]:
/// the relabeled sub-hypergraph and, for each new id, the original vertex id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubHypergraph {
    pub hypergraph: UniformHypergraph,
    pub vertex_ids: Vec<usize>,
}

/// Vertices at distance exactly one and exactly two from a source vertex.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Neighborhoods {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl UniformHypergraph {
    /// Builds a hypergraph, validating uniformity, vertex range, repeated
    /// vertices and duplicate edges. Edge order and vertex order within an edge
    /// are irrelevant.
    pub fn new<I, E>(r: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if r < 2 {
            return Err(Error::InvalidUniformity(r));
        }
        let mut list: Vec<Vec<usize>> = Vec::new();
        for (idx, e) in edges.into_iter().enumerate() {
            let e = e.as_ref();
            if e.len() != r {
                return Err(Error::EdgeSize {
                    edge: idx,
                    expected: r,
                    found: e.len(),
                });
            }
            let mut sorted = e.to_vec();
            sorted.sort_unstable();
            if let Some(&v) = sorted.iter().find(|&&v| v >= n) {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::RepeatedVertex { edge: idx });
            }
            list.push(sorted);
        }
        let mut order: Vec<usize> = (0..list.len()).collect();
        order.sort_by(|&a, &b| list[a].cmp(&list[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if list[w[0]] == list[w[1]] {
                return Err(Error::DuplicateEdge { edge: w[1].max(w[0]) });
            }
        }
        let mut flat = Vec::with_capacity(list.len() * r);
        for i in order {
            flat.extend_from_slice(&list[i]);
        }
        Ok(Self { r, n, edges: flat })
    }

    /// Builds from edges already known to be sorted, distinct and in
    /// lexicographic order.
    pub(crate) fn from_sorted_flat(r: usize, n: usize, edges: Vec<usize>) -> Self {
        debug_assert_eq!(edges.len() % r, 0);
        let h = Self { r, n, edges };
        debug_assert!(h.edges().all(|e| e.windows(2).all(|w| w[0] < w[1])));
        debug_assert!(h.edge_list_sorted());
        h
    }

    fn edge_list_sorted(&self) -> bool {
        let m = self.edge_count();
        (1..m).all(|i| self.edge(i - 1) < self.edge(i))
    }

    /// The hypergraph with no edges.
    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Self::new(r, n, core::iter::empty::<[usize; 0]>())
    }

    /// The Fano plane: 7 points, 7 lines, every pair of points on one line.
    pub fn fano() -> Self {
        const LINES: [[usize; 3]; 7] = [
            [0, 1, 2],
            [0, 3, 4],
            [0, 5, 6],
            [1, 3, 5],
            [1, 4, 6],
            [2, 3, 6],
            [2, 4, 5],
        ];
        Self::new(3, 7, LINES).expect("fano lines are valid")
    }

    /// `d` edges of size `r` sharing only the center vertex 0.
    pub fn loose_star(r: usize, d: usize) -> Result<Self> {
        if r < 2 {
            return Err(Error::InvalidUniformity(r));
        }
        let n = 1 + d * (r - 1);
        let edges = (0..d).map(|i| {
            let mut e = vec![0];
            e.extend((0..r - 1).map(|j| 1 + i * (r - 1) + j));
            e
        });
        Self::new(r, n, edges)
    }

    /// A simple graph viewed as a 2-uniform hypergraph.
    pub fn graph(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::new(2, n, edges.iter().map(|&(a, b)| [a, b]))
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len() / self.r
    }

    /// The `i`-th edge in canonical order. Panics when out of range.
    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i * self.r..(i + 1) * self.r]
    }

    pub fn edges(&self) -> core::slice::ChunksExact<'_, usize> {
        self.edges.chunks_exact(self.r)
    }

    /// Index of `edge` (sorted) in the edge list, if present.
    pub fn find_edge(&self, edge: &[usize]) -> Option<usize> {
        let m = self.edge_count();
        let (mut lo, mut hi) = (0, m);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.edge(mid).cmp(edge) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }

    pub fn contains_edge(&self, edge: &[usize]) -> bool {
        let mut sorted = edge.to_vec();
        sorted.sort_unstable();
        self.find_edge(&sorted).is_some()
    }

    /// A copy with one more edge.
    pub fn with_edge(&self, edge: &[usize]) -> Result<Self> {
        let mut all: Vec<&[usize]> = self.edges().collect();
        all.push(edge);
        Self::new(self.r, self.n, all)
    }

    /// A copy with the `i`-th edge removed.
    pub fn without_edge(&self, i: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.drain(i * self.r..(i + 1) * self.r);
        Self::from_sorted_flat(self.r, self.n, edges)
    }

    /// Applies a relabeling where `perm[old] = new`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(Error::InvalidParameter(format!(
                    "relabeling is not a permutation of 0..{}",
                    self.n
                )));
            }
            seen[p] = true;
        }
        Self::new(
            self.r,
            self.n,
            self.edges().map(|e| e.iter().map(|&v| perm[v]).collect::<Vec<_>>()),
        )
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Self) -> Result<Self> {
        if self.r != other.r {
            return Err(Error::InvalidParameter(format!(
                "uniformity mismatch: {} vs {}",
                self.r, other.r
            )));
        }
        let shift = self.n;
        let edges = self
            .edges()
            .map(|e| e.to_vec())
            .chain(other.edges().map(|e| e.iter().map(|&v| v + shift).collect()));
        Self::new(self.r, self.n + other.n, edges.collect::<Vec<_>>())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Number of edges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|&&u| u == v).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &v in &self.edges {
            d[v] += 1;
        }
        d
    }

    /// Maximum degree; 0 for the empty hypergraph.
    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// For every vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// True iff any two distinct edges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        let mut pairs = BTreeSet::new();
        self.edges().all(|e| {
            (0..e.len()).all(|i| (i + 1..e.len()).all(|j| pairs.insert((e[i], e[j]))))
        })
    }

    /// All degrees equal (vacuously true without vertices).
    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    /// Sorted list of vertices sharing an edge with `v`.
    pub fn neighbors(&self, v: usize) -> Result<Vec<usize>> {
        self.check_vertex(v)?;
        let mut out: Vec<usize> = self
            .edges()
            .filter(|e| e.contains(&v))
            .flat_map(|e| e.iter().copied())
            .filter(|&u| u != v)
            .collect();
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }

    fn distances_from(&self, u: usize, inc: &[Vec<usize>], limit: usize) -> Vec<usize> {
        let mut dist = vec![usize::MAX; self.n];
        dist[u] = 0;
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            if dist[x] >= limit {
                continue;
            }
            for &ei in &inc[x] {
                for &y in self.edge(ei) {
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        queue.push_back(y);
                    }
                }
            }
        }
        dist
    }

    /// Vertices at distance exactly 1 and exactly 2 from `u`.
    pub fn neighborhoods(&self, u: usize) -> Result<Neighborhoods> {
        self.check_vertex(u)?;
        let dist = self.distances_from(u, &self.incidence(), 2);
        let mut nb = Neighborhoods::default();
        for (v, &d) in dist.iter().enumerate() {
            match d {
                1 => nb.first.push(v),
                2 => nb.second.push(v),
                _ => {}
            }
        }
        Ok(nb)
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    /// Isolated vertices form singleton components.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let inc = self.incidence();
        let mut comp = vec![usize::MAX; self.n];
        let mut out: Vec<Vec<usize>> = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            let id = out.len();
            comp[s] = id;
            let mut members = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &ei in &inc[x] {
                    for &y in self.edge(ei) {
                        if comp[y] == usize::MAX {
                            comp[y] = id;
                            members.push(y);
                            stack.push(y);
                        }
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    fn membership(&self, set: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.n];
        for &v in set {
            self.check_vertex(v)?;
            mask[v] = true;
        }
        Ok(mask)
    }

    fn restrict(&self, keep: &[bool], edge_ok: impl Fn(&[usize]) -> bool) -> SubHypergraph {
        let vertex_ids: Vec<usize> = (0..self.n).filter(|&v| keep[v]).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in vertex_ids.iter().enumerate() {
            new_id[v] = i;
        }
        // Relabeling is monotone, so sortedness is preserved.
        let mut edges = Vec::new();
        for e in self.edges() {
            if e.iter().all(|&v| keep[v]) && edge_ok(e) {
                edges.extend(e.iter().map(|&v| new_id[v]));
            }
        }
        SubHypergraph {
            hypergraph: Self::from_sorted_flat(self.r, vertex_ids.len(), edges),
            vertex_ids,
        }
    }

    /// `H[S]`: edges contained in `S`, vertices relabeled in increasing order.
    pub fn induced(&self, s: &[usize]) -> Result<SubHypergraph> {
        let keep = self.membership(s)?;
        Ok(self.restrict(&keep, |_| true))
    }

    /// `H[S, T]`: edges of `H[S ∪ T]` meeting both `S` and `T`.
    pub fn cross(&self, s: &[usize], t: &[usize]) -> Result<SubHypergraph> {
        let in_s = self.membership(s)?;
        let in_t = self.membership(t)?;
        if let Some(v) = (0..self.n).find(|&v| in_s[v] && in_t[v]) {
            return Err(Error::OverlappingSets(v));
        }
        let keep: Vec<bool> = (0..self.n).map(|v| in_s[v] || in_t[v]).collect();
        Ok(self.restrict(&keep, |e| {
            e.iter().any(|&v| in_s[v]) && e.iter().any(|&v| in_t[v])
        }))
    }

    /// True iff every edge meets the head part in exactly one vertex.
    pub fn check_hm_bipartite(&self, p: &HmBipartition) -> Result<bool> {
        if p.n != self.n {
            return Err(Error::MalformedPartition(format!(
                "partition covers {} vertices, hypergraph has {}",
                p.n, self.n
            )));
        }
        Ok(self
            .edges()
            .all(|e| e.iter().filter(|&&v| p.is_head(v)).count() == 1))
    }
}

/// A head/mass bipartition of the vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HmBipartition {
    n: usize,
    head: Vec<usize>,
    mass: Vec<usize>,
}

impl HmBipartition {
    /// Partition of `0..n` with the given head; the rest is the mass part.
    pub fn new(n: usize, head: &[usize]) -> Result<Self> {
        let mut in_head = vec![false; n];
        for &v in head {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if in_head[v] {
                return Err(Error::MalformedPartition(format!(
                    "vertex {v} listed twice in head"
                )));
            }
            in_head[v] = true;
        }
        let head = (0..n).filter(|&v| in_head[v]).collect();
        let mass = (0..n).filter(|&v| !in_head[v]).collect();
        Ok(Self { n, head, mass })
    }

    /// Validates that `head` and `mass` partition `0..n`.
    pub fn from_parts(n: usize, head: &[usize], mass: &[usize]) -> Result<Self> {
        let p = Self::new(n, head)?;
        let mut sorted = mass.to_vec();
        sorted.sort_unstable();
        if sorted != p.mass {
            return Err(Error::MalformedPartition(
                "head and mass do not partition the vertex set".into(),
            ));
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn head(&self) -> &[usize] {
        &self.head
    }

    pub fn mass(&self) -> &[usize] {
        &self.mass
    }

    pub fn is_head(&self, v: usize) -> bool {
        self.head.binary_search(&v).is_ok()
    }
}

#[cfg(feature = "serde")]
mod serde_impl {
    use super::*;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    struct Repr {
        r: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
    }

    impl Serialize for UniformHypergraph {
        fn serialize<S: Serializer>(&self, s: S) -> core::result::Result<S::Ok, S::Error> {
            Repr {
                r: self.r,
                n: self.n,
                edges: self.edges().map(|e| e.to_vec()).collect(),
            }
            .serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for UniformHypergraph {
        fn deserialize<D: Deserializer<'de>>(d: D) -> core::result::Result<Self, D::Error> {
            let repr = Repr::deserialize(d)?;
            UniformHypergraph::new(repr.r, repr.n, repr.edges).map_err(serde::de::Error::custom)
        }
    }
}
