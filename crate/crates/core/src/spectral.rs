//! Adjacency-tensor application and the spectral radius by shifted power
//! iteration.
//!
//! For an r-uniform hypergraph the tensor entries are `1/(r-1)!` on every
//! ordering of an edge, so `(A x^{r-1})_v` collapses to a sum over edges `e ∋ v`
//! of the product of `x` over `e \ {v}`. The tensor itself is never built.
//!
//! Each connected component (a weakly irreducible block) is iterated with the
//! unit shift `y = A x^{r-1} + x^{[r-1]}`, `x <- y^{[1/(r-1)]}` normalized to
//! max-norm one. The min and max of `y_v / x_v^{r-1}` enclose `ρ + 1` on that
//! component; iteration stops once the enclosure is narrower than `tol`
//! relative to its upper end.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hypergraph::UniformHypergraph;

#[derive(Clone, Copy, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SpectralOptions {
    /// Relative width of the ratio enclosure at which iteration stops.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for SpectralOptions {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iter: 100_000,
        }
    }
}

impl SpectralOptions {
    pub(crate) fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::InvalidParameter(alloc::format!(
                "tolerance must be positive and finite, got {}",
                self.tol
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SpectralResult {
    /// Midpoint of the enclosure.
    pub rho: f64,
    pub lower: f64,
    pub upper: f64,
    /// Nonnegative eigenvector with max entry 1. For a disconnected input it is
    /// supported on the component attaining the spectral radius.
    pub eigenvector: Vec<f64>,
    pub iterations: usize,
    /// `max_v |(A x^{r-1})_v - rho x_v^{r-1}|`.
    pub residual: f64,
    pub converged: bool,
}

impl SpectralResult {
    /// The radius if the iteration converged, otherwise the enclosure as an error.
    pub fn converged_rho(&self) -> Result<f64> {
        if self.converged {
            Ok(self.rho)
        } else {
            Err(Error::NotConverged {
                lower: self.lower,
                upper: self.upper,
            })
        }
    }
}

pub(crate) fn powi(x: f64, e: usize) -> f64 {
    let mut acc = 1.0;
    for _ in 0..e {
        acc *= x;
    }
    acc
}

fn root(x: f64, e: usize) -> f64 {
    match e {
        1 => x,
        2 => libm::sqrt(x),
        _ => libm::pow(x, 1.0 / e as f64),
    }
}

fn apply_into(h: &UniformHypergraph, x: &[f64], y: &mut [f64]) {
    y.iter_mut().for_each(|v| *v = 0.0);
    for e in h.edges() {
        for (i, &v) in e.iter().enumerate() {
            let prod: f64 = e
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &u)| x[u])
                .product();
            y[v] += prod;
        }
    }
}

/// `y_v = Σ_{e ∋ v} Π_{u ∈ e \ {v}} x_u`.
pub fn apply_adjacency(h: &UniformHypergraph, x: &[f64]) -> Result<Vec<f64>> {
    if x.len() != h.n() {
        return Err(Error::DimensionMismatch {
            expected: h.n(),
            found: x.len(),
        });
    }
    let mut y = vec![0.0; h.n()];
    apply_into(h, x, &mut y);
    Ok(y)
}

/// `max_v |(A x^{r-1})_v - rho x_v^{r-1}|`.
pub fn residual(h: &UniformHypergraph, rho: f64, x: &[f64]) -> Result<f64> {
    let y = apply_adjacency(h, x)?;
    let e = h.r() - 1;
    Ok(y.iter()
        .zip(x)
        .map(|(&yv, &xv)| libm::fabs(yv - rho * powi(xv, e)))
        .fold(0.0, f64::max))
}

/// Outcome of the iteration on one irreducible block.
pub(crate) struct BlockRun {
    pub lower: f64,
    pub upper: f64,
    pub vector: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

impl BlockRun {
    pub fn rho(&self) -> f64 {
        0.5 * (self.lower + self.upper)
    }
}

/// Shifted power iteration on an irreducible nonnegative operator of order
/// `exponent + 1` acting on `dim` coordinates. `apply` writes `A x^{exponent}`.
pub(crate) fn shifted_power_iteration<F>(
    dim: usize,
    exponent: usize,
    opts: &SpectralOptions,
    mut apply: F,
) -> BlockRun
where
    F: FnMut(&[f64], &mut [f64]),
{
    let mut x = vec![1.0; dim];
    let mut y = vec![0.0; dim];
    let (mut lo, mut hi) = (0.0, f64::INFINITY);
    for it in 1..=opts.max_iter {
        apply(&x, &mut y);
        lo = f64::INFINITY;
        hi = 0.0f64;
        for (yv, &xv) in y.iter_mut().zip(&x) {
            let xp = powi(xv, exponent);
            *yv += xp;
            let ratio = *yv / xp;
            lo = lo.min(ratio);
            hi = hi.max(ratio);
        }
        if hi - lo <= opts.tol * hi {
            return BlockRun {
                lower: (lo - 1.0).max(0.0),
                upper: hi - 1.0,
                vector: x,
                iterations: it,
                converged: true,
            };
        }
        for (xv, &yv) in x.iter_mut().zip(&y) {
            *xv = root(yv, exponent);
        }
        let max = x.iter().copied().fold(0.0, f64::max);
        x.iter_mut().for_each(|v| *v /= max);
    }
    BlockRun {
        lower: (lo - 1.0).max(0.0),
        upper: hi - 1.0,
        vector: x,
        iterations: opts.max_iter,
        converged: false,
    }
}

/// Spectral radius with default options.
pub fn spectral_radius(h: &UniformHypergraph) -> Result<SpectralResult> {
    spectral_radius_with(h, &SpectralOptions::default())
}

pub fn spectral_radius_with(h: &UniformHypergraph, opts: &SpectralOptions) -> Result<SpectralResult> {
    opts.validate()?;
    if h.n() == 0 {
        return Err(Error::InvalidParameter(
            "spectral radius needs at least one vertex".into(),
        ));
    }
    let exponent = h.r() - 1;
    let mut best: Option<(BlockRun, Vec<usize>)> = None;
    let (mut lower, mut upper) = (0.0f64, 0.0f64);
    let mut iterations = 0;
    let mut converged = true;
    for comp in h.components() {
        if comp.len() < 2 {
            continue;
        }
        let sub = h.induced(&comp)?.hypergraph;
        let run = shifted_power_iteration(sub.n(), exponent, opts, |x, y| apply_into(&sub, x, y));
        lower = lower.max(run.lower);
        upper = upper.max(run.upper);
        iterations = iterations.max(run.iterations);
        converged &= run.converged;
        if best.as_ref().is_none_or(|(b, _)| run.rho() > b.rho()) {
            best = Some((run, comp));
        }
    }
    let (rho, eigenvector) = match best {
        None => (0.0, vec![1.0; h.n()]),
        Some((run, comp)) => {
            let mut x = vec![0.0; h.n()];
            for (&v, &xv) in comp.iter().zip(&run.vector) {
                x[v] = xv;
            }
            (run.rho(), x)
        }
    };
    let rho = rho.clamp(lower, upper);
    let residual = residual(h, rho, &eigenvector)?;
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
