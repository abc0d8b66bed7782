//! The 2-shadow: every hyperedge replaced by a clique, pair multiplicities
//! counting the hyperedges that contain the pair.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bounds::{BoundReport, Direction, Verdict};
use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;
use crate::spectral::{shifted_power_iteration, spectral_radius, SpectralOptions, SpectralResult};

/// Largest vertex count for which [`Multigraph::to_dense`] materializes a matrix.
pub const DENSE_MAX_VERTICES: usize = 4096;

/// Loopless multigraph on `0..n` stored as a sparse pair map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    n: usize,
    multiplicity: BTreeMap<(usize, usize), u32>,
}

impl Multigraph {
    /// Builds from `(u, v, multiplicity)` triples; repeated pairs add up and
    /// zero multiplicities are dropped.
    pub fn new(n: usize, pairs: &[(usize, usize, u32)]) -> Result<Self> {
        let mut multiplicity = BTreeMap::new();
        for (i, &(u, v, m)) in pairs.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { vertex: u.max(v), n });
            }
            if u == v {
                return Err(Error::RepeatedVertex { edge: i });
            }
            if m > 0 {
                *multiplicity.entry((u.min(v), u.max(v))).or_insert(0) += m;
            }
        }
        Ok(Self { n, multiplicity })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `φ({u, v})`, zero for absent pairs.
    pub fn multiplicity(&self, u: usize, v: usize) -> u32 {
        self.multiplicity
            .get(&(u.min(v), u.max(v)))
            .copied()
            .unwrap_or(0)
    }

    /// Stored pairs `(u, v, φ)` with `u < v`, in order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        self.multiplicity.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Number of distinct adjacent pairs.
    pub fn pair_count(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn is_simple(&self) -> bool {
        self.multiplicity.values().all(|&m| m == 1)
    }

    /// Adjacency lists with multiplicities.
    pub fn adjacency(&self) -> Vec<Vec<(usize, u32)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (&(u, v), &m) in &self.multiplicity {
            adj[u].push((v, m));
            adj[v].push((u, m));
        }
        adj
    }

    /// Dense adjacency matrix, row-major.
    pub fn to_dense(&self) -> Result<Vec<f64>> {
        if self.n > DENSE_MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "dense multigraph size",
                limit: DENSE_MAX_VERTICES,
            });
        }
        let mut a = vec![0.0; self.n * self.n];
        for (&(u, v), &m) in &self.multiplicity {
            a[u * self.n + v] = m as f64;
            a[v * self.n + u] = m as f64;
        }
        Ok(a)
    }

    /// Connected components as sorted vertex lists.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &(y, _) in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

pub fn two_shadow(h: &UniformHypergraph) -> Multigraph {
    let mut multiplicity = BTreeMap::new();
    for e in h.edges() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                *multiplicity.entry((u, v)).or_insert(0) += 1;
            }
        }
    }
    Multigraph {
        n: h.n(),
        multiplicity,
    }
}

/// Spectral radius of the adjacency matrix `a_uv = φ({u, v})`, with the same
/// per-component shifted iteration and enclosure as the tensor case.
pub fn multigraph_spectral_radius(g: &Multigraph, opts: &SpectralOptions) -> Result<SpectralResult> {
    opts.validate()?;
    if g.n() == 0 {
        return Err(Error::InvalidParameter(
            "spectral radius needs at least one vertex".into(),
        ));
    }
    let adj = g.adjacency();
    let mut best: Option<(f64, Vec<usize>, Vec<f64>)> = None;
    let (mut lower, mut upper) = (0.0f64, 0.0f64);
    let mut iterations = 0;
    let mut converged = true;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let mut local = vec![usize::MAX; g.n()];
        for (i, &v) in comp.iter().enumerate() {
            local[v] = i;
        }
        let ladj: Vec<Vec<(usize, f64)>> = comp
            .iter()
            .map(|&v| adj[v].iter().map(|&(u, m)| (local[u], m as f64)).collect())
            .collect();
        let run = shifted_power_iteration(comp.len(), 1, opts, |x, y| {
            for (yi, row) in y.iter_mut().zip(&ladj) {
                *yi = row.iter().map(|&(u, m)| m * x[u]).sum();
            }
        });
        lower = lower.max(run.lower);
        upper = upper.max(run.upper);
        iterations = iterations.max(run.iterations);
        converged &= run.converged;
        let rho = run.rho();
        if best.as_ref().is_none_or(|(b, _, _)| rho > *b) {
            best = Some((rho, comp, run.vector));
        }
    }
    let (rho, eigenvector) = match best {
        None => (0.0, vec![1.0; g.n()]),
        Some((rho, comp, local)) => {
            let mut x = vec![0.0; g.n()];
            for (&v, &xv) in comp.iter().zip(&local) {
                x[v] = xv;
            }
            (rho, x)
        }
    };
    let rho = rho.clamp(lower, upper);
    let residual = (0..g.n())
        .map(|v| {
            let ax: f64 = adj[v].iter().map(|&(u, m)| m as f64 * eigenvector[u]).sum();
            libm::fabs(ax - rho * eigenvector[v])
        })
        .fold(0.0, f64::max);
    Ok(SpectralResult {
        rho,
        lower,
        upper,
        eigenvector,
        iterations,
        residual,
        converged,
    })
}

/// `ρ(H) ≤ ρ(∂H)/(r−1)` with `tol` as comparison tolerance.
///
/// Side conditions: `connected`, `regular`, `equality` (the two sides within
/// `tol`), and for connected `H`, `equality_iff_regular`, which holds when
/// equality occurs exactly for regular `H` (always for `r = 2`, where the
/// shadow is `H` itself).
pub fn check_shadow_bound(h: &UniformHypergraph, tol: f64) -> Result<BoundReport> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(alloc::format!(
            "tolerance must be positive, got {tol}"
        )));
    }
    let opts = SpectralOptions::default();
    let rho_h = spectral_radius(h)?.converged_rho()?;
    let rho_s = multigraph_spectral_radius(&two_shadow(h), &opts)?.converged_rho()?;
    let bound = rho_s / (h.r() - 1) as f64;
    let connected = h.is_connected();
    let regular = h.is_regular();
    let equality = libm::fabs(bound - rho_h) <= tol;
    let mut rep = BoundReport::new("shadow", bound, Direction::Upper)
        .param("r", h.r() as f64)
        .param("n", h.n() as f64)
        .param("rho_shadow", rho_s)
        .hypothesis(Verdict::Holds)
        .tolerance(tol)
        .side_condition("connected", connected)
        .side_condition("regular", regular)
        .side_condition("equality", equality);
    if connected {
        let predicted = h.r() == 2 || regular;
        rep = rep.side_condition("equality_iff_regular", equality == predicted);
    }
    rep.measure(rho_h);
    Ok(rep)
}

/// For linear `H`: the shadow restricted to `N(u)` is a disjoint union of
/// exactly `d(u)` cliques on `r−1` vertices each.
pub fn c3free_neighborhood_structure(h: &UniformHypergraph, u: usize) -> Result<bool> {
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    let nbrs = h.neighbors(u)?;
    let d = h.degree(u)?;
    let inside = |v: usize| nbrs.binary_search(&v).is_ok();
    let pos = |v: usize| nbrs.binary_search(&v).expect("neighbor");
    let mut pairs: Vec<(usize, usize, u32)> = Vec::new();
    for e in h.edges() {
        let local: Vec<usize> = e.iter().copied().filter(|&v| inside(v)).map(pos).collect();
        for (i, &a) in local.iter().enumerate() {
            for &b in &local[i + 1..] {
                pairs.push((a, b, 1));
            }
        }
    }
    let g = Multigraph::new(nbrs.len(), &pairs)?;
    let comps = g.components();
    let k = h.r() - 1;
    Ok(comps.len() == d
        && comps.iter().all(|c| {
            c.len() == k
                && c.iter()
                    .enumerate()
                    .all(|(i, &a)| c[i + 1..].iter().all(|&b| g.multiplicity(a, b) > 0))
        }))
}
