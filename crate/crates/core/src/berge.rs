//! Berge copies of simple graphs inside uniform hypergraphs.
//!
//! `H` contains a Berge-`F` when there are injections `V(F) -> V(H)` and
//! `E(F) -> E(H)` such that every `F`-edge `{a, b}` lands in a hyperedge
//! containing the images of `a` and `b`.
//!
//! The search places `F`-vertices one at a time (densest first, then
//! neighbors of placed vertices) and keeps a maximum matching between active
//! `F`-edges and the hyperedges covering their endpoint images. A branch dies
//! as soon as a new `F`-edge cannot be matched, which is exactly a Hall
//! violation on the current prefix.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::hypergraph::{HmBipartition, UniformHypergraph};

/// Default cap on pattern edges for callers that want one.
pub const DEFAULT_MAX_PATTERN_EDGES: usize = 12;

/// Cap on `e(F) * (r - 2)` for [`enumerate_berge_family`].
pub const FAMILY_MAX_SLOTS: usize = 12;

/// A simple graph used as a Berge pattern.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct PatternGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl PatternGraph {
    /// Validates and normalizes an edge list: endpoints ordered, edges sorted.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut out = Vec::with_capacity(edges.len());
        for (i, &(a, b)) in edges.iter().enumerate() {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(Error::RepeatedVertex { edge: i });
            }
            out.push((a.min(b), a.max(b)));
        }
        out.sort_unstable();
        if let Some(i) = out.windows(2).position(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge { edge: i + 1 });
        }
        Ok(Self { n, edges: out })
    }

    /// The cycle `C_k` on `0..k`, `k >= 3`.
    pub fn cycle(k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidParameter(format!("cycle length {k} < 3")));
        }
        let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Self::from_edges(k, &edges)
    }

    /// `K_{s,t}` with the `s`-side on `0..s` and the `t`-side on `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Self> {
        if s == 0 || t == 0 {
            return Err(Error::InvalidParameter(format!(
                "K_{{s,t}} needs s, t >= 1, got {s}, {t}"
            )));
        }
        let edges: Vec<_> = (0..s)
            .flat_map(|a| (s..s + t).map(move |b| (a, b)))
            .collect();
        Self::from_edges(s + t, &edges)
    }

    /// Path with `len` edges on `0..=len`.
    pub fn path(len: usize) -> Self {
        let edges: Vec<_> = (0..len).map(|i| (i, i + 1)).collect();
        Self::from_edges(len + 1, &edges).expect("path edges are valid")
    }

    pub fn single_edge() -> Self {
        Self::path(1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }

    fn is_triangle(&self) -> bool {
        self.n == 3 && self.edges.len() == 3
    }
}

/// Witness of a Berge copy: `vertex_map[x]` is the image of pattern vertex
/// `x`, `edge_map[i]` the index (into `H`'s edge list) of the hyperedge
/// assigned to pattern edge `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct BergeEmbedding {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

impl BergeEmbedding {
    /// Checks injectivity of both maps and edge coverage.
    pub fn validate(&self, h: &UniformHypergraph, f: &PatternGraph) -> bool {
        if self.vertex_map.len() != f.n() || self.edge_map.len() != f.edge_count() {
            return false;
        }
        let vs: BTreeSet<_> = self.vertex_map.iter().collect();
        let es: BTreeSet<_> = self.edge_map.iter().collect();
        if vs.len() != self.vertex_map.len() || es.len() != self.edge_map.len() {
            return false;
        }
        if self.vertex_map.iter().any(|&v| v >= h.n())
            || self.edge_map.iter().any(|&e| e >= h.edge_count())
        {
            return false;
        }
        f.edges().iter().zip(&self.edge_map).all(|(&(a, b), &e)| {
            let edge = h.edge(e);
            edge.contains(&self.vertex_map[a]) && edge.contains(&self.vertex_map[b])
        })
    }
}

/// For every vertex, the sorted list of co-occurring vertices with the
/// indices of the edges containing both.
struct PairIndex {
    adj: Vec<Vec<(usize, Vec<usize>)>>,
}

impl PairIndex {
    fn new(h: &UniformHypergraph) -> Self {
        let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for (i, e) in h.edges().enumerate() {
            for (j, &a) in e.iter().enumerate() {
                for &b in &e[j + 1..] {
                    map.entry((a, b)).or_default().push(i);
                }
            }
        }
        let mut adj = vec![Vec::new(); h.n()];
        for ((a, b), es) in map {
            adj[a].push((b, es.clone()));
            adj[b].push((a, es));
        }
        for list in &mut adj {
            list.sort_unstable_by_key(|(b, _)| *b);
        }
        Self { adj }
    }

    fn edges_with(&self, a: usize, b: usize) -> &[usize] {
        match self.adj[a].binary_search_by_key(&b, |(x, _)| *x) {
            Ok(i) => &self.adj[a][i].1,
            Err(_) => &[],
        }
    }
}

const UNSET: usize = usize::MAX;

struct Searcher<'a> {
    f: &'a PatternGraph,
    idx: &'a PairIndex,
    n: usize,
    hdeg: Vec<usize>,
    order: Vec<usize>,
    fadj: Vec<Vec<(usize, usize)>>,
    fdeg: Vec<usize>,
    linear: bool,
    allowed: Option<&'a dyn Fn(usize, usize) -> bool>,
    phi: Vec<usize>,
    used: Vec<bool>,
    matched: Vec<usize>,
}

impl<'a> Searcher<'a> {
    fn new(
        h: &UniformHypergraph,
        f: &'a PatternGraph,
        idx: &'a PairIndex,
        linear: bool,
        allowed: Option<&'a dyn Fn(usize, usize) -> bool>,
    ) -> Self {
        let mut fadj = vec![Vec::new(); f.n()];
        for (i, &(a, b)) in f.edges().iter().enumerate() {
            fadj[a].push((b, i));
            fadj[b].push((a, i));
        }
        let fdeg = f.degrees();
        Self {
            f,
            idx,
            n: h.n(),
            hdeg: h.degrees(),
            order: placement_order(f.n(), &fadj, &fdeg),
            fadj,
            fdeg,
            linear,
            allowed,
            phi: vec![UNSET; f.n()],
            used: vec![false; h.n()],
            matched: vec![UNSET; f.edge_count()],
        }
    }

    fn run(mut self) -> Option<BergeEmbedding> {
        if self.f.n() > self.n {
            return None;
        }
        if self.search(0) {
            Some(BergeEmbedding {
                vertex_map: self.phi,
                edge_map: self.matched,
            })
        } else {
            None
        }
    }

    fn search(&mut self, depth: usize) -> bool {
        let Some(&x) = self.order.get(depth) else {
            return true;
        };
        let anchor = self.fadj[x]
            .iter()
            .find(|(y, _)| self.phi[*y] != UNSET)
            .map(|&(y, _)| self.phi[y]);
        let candidates: Vec<usize> = match anchor {
            Some(a) => self.idx.adj[a].iter().map(|(b, _)| *b).collect(),
            None => (0..self.n).collect(),
        };
        for v in candidates {
            if self.used[v]
                || self.hdeg[v] < self.fdeg[x]
                || self.allowed.is_some_and(|ok| !ok(x, v))
            {
                continue;
            }
            let saved = self.matched.clone();
            self.phi[x] = v;
            self.used[v] = true;
            let fadj = &self.fadj[x];
            let new_edges: Vec<usize> = fadj
                .iter()
                .filter(|(y, _)| *y != x && self.phi[*y] != UNSET)
                .map(|&(_, fe)| fe)
                .collect();
            if new_edges.into_iter().all(|fe| self.assign(fe)) && self.search(depth + 1) {
                return true;
            }
            self.phi[x] = UNSET;
            self.used[v] = false;
            self.matched = saved;
        }
        false
    }

    fn candidates(&self, fe: usize) -> &'a [usize] {
        let (a, b) = self.f.edges()[fe];
        self.idx.edges_with(self.phi[a], self.phi[b])
    }

    fn assign(&mut self, fe: usize) -> bool {
        let cands = self.candidates(fe);
        if self.linear {
            // Linear: the covering edge is unique, so only distinctness matters.
            match cands.first() {
                Some(&c) if !self.matched.contains(&c) => {
                    self.matched[fe] = c;
                    true
                }
                _ => false,
            }
        } else {
            let mut visited = Vec::new();
            self.augment(fe, &mut visited)
        }
    }

    fn augment(&mut self, fe: usize, visited: &mut Vec<usize>) -> bool {
        for &c in self.candidates(fe) {
            if visited.contains(&c) {
                continue;
            }
            visited.push(c);
            let owner = self.matched.iter().position(|&m| m == c);
            if owner.is_none_or(|o| self.augment(o, visited)) {
                self.matched[fe] = c;
                return true;
            }
        }
        false
    }
}

/// Highest-degree vertex first, then repeatedly the vertex with the most
/// already-placed neighbors (ties: higher degree, lower id).
fn placement_order(n: usize, fadj: &[Vec<(usize, usize)>], fdeg: &[usize]) -> Vec<usize> {
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let x = (0..n)
            .filter(|&x| !placed[x])
            .max_by(|&a, &b| {
                (links[a], fdeg[a])
                    .cmp(&(links[b], fdeg[b]))
                    .then(b.cmp(&a))
            })
            .expect("unplaced vertex remains");
        placed[x] = true;
        order.push(x);
        for &(y, _) in &fadj[x] {
            links[y] += 1;
        }
    }
    order
}

/// A Berge-`F` in `H`, if any. Uses the triangle fast path when `H` is linear
/// and `F` is a triangle. No size guard is applied here.
pub fn contains_berge(h: &UniformHypergraph, f: &PatternGraph) -> Option<BergeEmbedding> {
    let linear = h.is_linear();
    let idx = PairIndex::new(h);
    if linear && f.is_triangle() {
        return linear_triangle(h, &idx).map(|tri| triangle_embedding(f, &idx, tri));
    }
    Searcher::new(h, f, &idx, linear, None).run()
}

/// Like [`contains_berge`] but always through the matching search.
pub fn contains_berge_generic(h: &UniformHypergraph, f: &PatternGraph) -> Option<BergeEmbedding> {
    let idx = PairIndex::new(h);
    Searcher::new(h, f, &idx, false, None).run()
}

/// Berge-`C_3` in a linear hypergraph: three edges meeting pairwise in three
/// distinct vertices. The embedding is for [`PatternGraph::cycle`]`(3)`.
pub fn linear_c3_witness(h: &UniformHypergraph) -> Result<Option<BergeEmbedding>> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    let idx = PairIndex::new(h);
    let c3 = PatternGraph::cycle(3)?;
    Ok(linear_triangle(h, &idx).map(|tri| triangle_embedding(&c3, &idx, tri)))
}

fn linear_triangle(h: &UniformHypergraph, idx: &PairIndex) -> Option<[usize; 3]> {
    let inc = h.incidence();
    for a in 0..h.n() {
        for (i, &e1) in inc[a].iter().enumerate() {
            for &e2 in &inc[a][i + 1..] {
                for &b in h.edge(e1).iter().filter(|&&b| b != a) {
                    for &c in h.edge(e2).iter().filter(|&&c| c != a) {
                        // In a linear hypergraph an edge through b and c is
                        // neither e1 nor e2.
                        if !idx.edges_with(b, c).is_empty() {
                            return Some([a, b, c]);
                        }
                    }
                }
            }
        }
    }
    None
}

fn triangle_embedding(f: &PatternGraph, idx: &PairIndex, tri: [usize; 3]) -> BergeEmbedding {
    let vertex_map = tri.to_vec();
    let edge_map = f
        .edges()
        .iter()
        .map(|&(a, b)| idx.edges_with(tri[a], tri[b])[0])
        .collect();
    BergeEmbedding {
        vertex_map,
        edge_map,
    }
}

/// Outcome of [`is_family_free`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyCheck {
    pub free: bool,
    /// Index of the first contained pattern and its witness.
    pub witness: Option<(usize, BergeEmbedding)>,
}

pub fn is_family_free(h: &UniformHypergraph, patterns: &[PatternGraph]) -> FamilyCheck {
    for (i, f) in patterns.iter().enumerate() {
        if let Some(w) = contains_berge(h, f) {
            return FamilyCheck {
                free: false,
                witness: Some((i, w)),
            };
        }
    }
    FamilyCheck {
        free: true,
        witness: None,
    }
}

/// The r-expansion: each pattern edge `i` gains the private vertices
/// `n + i(r-2) .. n + (i+1)(r-2)`.
pub fn expansion(f: &PatternGraph, r: usize) -> Result<UniformHypergraph> {
    if r < 2 {
        return Err(Error::InvalidUniformity(r));
    }
    let extra = r - 2;
    let edges = f.edges().iter().enumerate().map(|(i, &(a, b))| {
        let mut e = vec![a, b];
        e.extend((0..extra).map(|j| f.n() + i * extra + j));
        e
    });
    UniformHypergraph::new(r, f.n() + f.edge_count() * extra, edges.collect::<Vec<_>>())
}

/// Which vertices may fill the `r - 2` added positions of each pattern edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Enlargement {
    /// New vertices outside `V(F)`, shared between edges in any pattern.
    #[default]
    FreshOnly,
    /// Additionally allow vertices of `F` itself.
    Any,
}

/// All r-uniform Berge-`F` hypergraphs up to isomorphism, each on the union of
/// its edges, in canonical form and sorted.
pub fn enumerate_berge_family(
    f: &PatternGraph,
    r: usize,
    mode: Enlargement,
) -> Result<Vec<UniformHypergraph>> {
    if r < 2 {
        return Err(Error::InvalidUniformity(r));
    }
    let slots = f.edge_count() * (r - 2);
    if slots > FAMILY_MAX_SLOTS {
        return Err(Error::CapacityExceeded {
            what: "added vertex slots",
            limit: FAMILY_MAX_SLOTS,
        });
    }
    let mut edges: Vec<Vec<usize>> = f.edges().iter().map(|&(a, b)| vec![a, b]).collect();
    let mut found = BTreeSet::new();
    fill_slots(f, r, mode, 0, f.n(), &mut edges, &mut found)?;
    Ok(found.into_iter().collect())
}

fn fill_slots(
    f: &PatternGraph,
    r: usize,
    mode: Enlargement,
    edge: usize,
    next_fresh: usize,
    edges: &mut Vec<Vec<usize>>,
    found: &mut BTreeSet<UniformHypergraph>,
) -> Result<()> {
    if edge == edges.len() {
        return record(r, edges, found);
    }
    if edges[edge].len() == r {
        return fill_slots(f, r, mode, edge + 1, next_fresh, edges, found);
    }
    let lowest = match mode {
        Enlargement::FreshOnly => f.n(),
        Enlargement::Any => 0,
    };
    // Fresh labels are introduced in increasing order, so each sharing
    // pattern of fresh vertices is generated once up to renaming.
    for v in lowest..=next_fresh {
        if edges[edge].contains(&v) {
            continue;
        }
        edges[edge].push(v);
        let next = if v == next_fresh { next_fresh + 1 } else { next_fresh };
        fill_slots(f, r, mode, edge, next, edges, found)?;
        edges[edge].pop();
    }
    Ok(())
}

fn record(
    r: usize,
    edges: &[Vec<usize>],
    found: &mut BTreeSet<UniformHypergraph>,
) -> Result<()> {
    let mut sorted: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            let mut e = e.clone();
            e.sort_unstable();
            e
        })
        .collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(());
    }
    let used: BTreeSet<usize> = sorted.iter().flatten().copied().collect();
    let id: BTreeMap<usize, usize> = used.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let h = UniformHypergraph::new(
        r,
        used.len(),
        sorted
            .iter()
            .map(|e| e.iter().map(|v| id[v]).collect::<Vec<_>>()),
    )?;
    found.insert(canonical_form(&h)?);
    Ok(())
}

/// A Berge-`K_{s,t}` whose `s`-side lies in the head part and whose `t`-side
/// lies in the mass part of `p`.
pub fn contains_exact_berge_kst(
    h: &UniformHypergraph,
    p: &HmBipartition,
    s: usize,
    t: usize,
) -> Result<Option<BergeEmbedding>> {
    if !h.check_hm_bipartite(p)? {
        return Err(Error::NotHmBipartite);
    }
    let f = PatternGraph::complete_bipartite(s, t)?;
    let idx = PairIndex::new(h);
    let side = |x: usize, v: usize| (x < s) == p.is_head(v);
    Ok(Searcher::new(h, &f, &idx, h.is_linear(), Some(&side)).run())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loose_triangle() -> UniformHypergraph {
        // a=0 b=1 c=2 x=3 y=4 z=5
        UniformHypergraph::new(3, 6, [[0, 1, 3], [1, 2, 4], [0, 2, 5]]).unwrap()
    }

    #[test]
    fn pattern_constructors() {
        let c4 = PatternGraph::cycle(4).unwrap();
        assert_eq!(c4.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        let k23 = PatternGraph::complete_bipartite(2, 3).unwrap();
        assert_eq!(k23.edge_count(), 6);
        assert_eq!(k23.degrees(), vec![3, 3, 2, 2, 2]);
        assert!(PatternGraph::cycle(2).is_err());
        assert!(PatternGraph::from_edges(3, &[(0, 0)]).is_err());
        assert!(PatternGraph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(PatternGraph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn loose_triangle_contains_c3() {
        let h = loose_triangle();
        let c3 = PatternGraph::cycle(3).unwrap();
        let w = contains_berge(&h, &c3).unwrap();
        assert!(w.validate(&h, &c3));
        let g = contains_berge_generic(&h, &c3).unwrap();
        assert!(g.validate(&h, &c3));
    }

    #[test]
    fn star_has_no_c3() {
        let star = UniformHypergraph::loose_star(3, 3).unwrap();
        let c3 = PatternGraph::cycle(3).unwrap();
        assert!(contains_berge(&star, &c3).is_none());
        assert!(contains_berge_generic(&star, &c3).is_none());
    }

    #[test]
    fn fano_contains_c3_and_c4() {
        let f = UniformHypergraph::fano();
        for k in 3..=5 {
            let c = PatternGraph::cycle(k).unwrap();
            let w = contains_berge(&f, &c).unwrap();
            assert!(w.validate(&f, &c), "C{k}");
        }
        let k23 = PatternGraph::complete_bipartite(2, 3).unwrap();
        // The two centers share a line, leaving only two lines through each
        // center for three distinct partners.
        assert!(contains_berge(&f, &k23).is_none());
    }

    #[test]
    fn non_linear_needs_matching() {
        // Pair {0,1} sits in two edges; a Berge-C2-like double use must be
        // resolved by the matching: C3 on 0,1,2 needs three distinct edges.
        let h = UniformHypergraph::new(3, 5, [[0, 1, 2], [0, 1, 3], [1, 2, 4]]).unwrap();
        let c3 = PatternGraph::cycle(3).unwrap();
        let w = contains_berge(&h, &c3).unwrap();
        assert!(w.validate(&h, &c3));
        let h2 = UniformHypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert!(contains_berge(&h2, &c3).is_none());
    }

    #[test]
    fn linear_c3_requires_linear() {
        let h = UniformHypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(linear_c3_witness(&h), Err(Error::NotLinear));
        let w = linear_c3_witness(&loose_triangle()).unwrap().unwrap();
        assert!(w.validate(&loose_triangle(), &PatternGraph::cycle(3).unwrap()));
    }

    #[test]
    fn family_check() {
        let star = UniformHypergraph::loose_star(3, 3).unwrap();
        let pats = [
            PatternGraph::cycle(3).unwrap(),
            PatternGraph::complete_bipartite(2, 2).unwrap(),
        ];
        assert!(is_family_free(&star, &pats).free);
        let fano = UniformHypergraph::fano();
        let res = is_family_free(&fano, &pats[..1]);
        assert!(!res.free);
        assert_eq!(res.witness.as_ref().unwrap().0, 0);
        assert!(is_family_free(&fano, &[]).free);
    }

    #[test]
    fn expansions() {
        let e = expansion(&PatternGraph::single_edge(), 3).unwrap();
        assert_eq!((e.n(), e.edge_count()), (3, 1));
        let c = expansion(&PatternGraph::cycle(3).unwrap(), 3).unwrap();
        assert_eq!((c.n(), c.edge_count()), (6, 3));
        assert!(c.is_linear());
        let k = expansion(&PatternGraph::complete_bipartite(2, 2).unwrap(), 4).unwrap();
        assert_eq!((k.n(), k.edge_count()), (12, 4));
        assert!(expansion(&PatternGraph::single_edge(), 1).is_err());
    }

    #[test]
    fn family_counts() {
        let c3 = PatternGraph::cycle(3).unwrap();
        assert_eq!(
            enumerate_berge_family(&c3, 3, Enlargement::FreshOnly).unwrap().len(),
            3
        );
        assert_eq!(
            enumerate_berge_family(&c3, 3, Enlargement::Any).unwrap().len(),
            4
        );
        let e = PatternGraph::single_edge();
        assert_eq!(
            enumerate_berge_family(&e, 3, Enlargement::FreshOnly).unwrap().len(),
            1
        );
        let big = PatternGraph::complete_bipartite(3, 3).unwrap();
        assert!(matches!(
            enumerate_berge_family(&big, 4, Enlargement::FreshOnly),
            Err(Error::CapacityExceeded { .. })
        ));
    }

    #[test]
    fn exact_kst() {
        let p = HmBipartition::new(6, &[0, 1]).unwrap();
        let h = UniformHypergraph::new(3, 6, [[0, 2, 3], [0, 4, 5], [1, 2, 4], [1, 3, 5]]).unwrap();
        // heads 0, 1 with mass 2, 5 use four different edges
        let w = contains_exact_berge_kst(&h, &p, 2, 2).unwrap().unwrap();
        assert!(w.validate(&h, &PatternGraph::complete_bipartite(2, 2).unwrap()));
        assert!(w.vertex_map[..2].iter().all(|&v| p.is_head(v)));
        assert!(contains_exact_berge_kst(&h, &p, 2, 3).unwrap().is_none());

        let single = UniformHypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        let p1 = HmBipartition::new(3, &[0]).unwrap();
        assert!(contains_exact_berge_kst(&single, &p1, 2, 2).unwrap().is_none());

        let bad = HmBipartition::new(3, &[0, 1]).unwrap();
        assert_eq!(
            contains_exact_berge_kst(&single, &bad, 2, 2),
            Err(Error::NotHmBipartite)
        );
    }
}
