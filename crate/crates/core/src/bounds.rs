//! Closed-form spectral and edge-count bounds, and checks of their hypotheses
//! and conclusions on concrete hypergraphs.
//!
//! Formula evaluators return a [`BoundReport`] (or a bare value) without a
//! measurement; the `*_check` functions take a hypergraph, decide the
//! structural hypotheses, and fill in the measured quantity.
//!
//! Spectral comparisons use an absolute tolerance of [`RHO_TOL`]. Edge counts
//! are compared exactly where the bound involves at most a square root, and
//! with a relative tolerance of [`EDGE_REL_TOL`] otherwise.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;

use crate::berge::{contains_berge, contains_exact_berge_kst, PatternGraph};
use crate::error::{Error, Result};
use crate::hypergraph::{HmBipartition, UniformHypergraph};
use crate::spectral::spectral_radius;
use crate::walks::walk_totals;

pub const RHO_TOL: f64 = 1e-9;
pub const EDGE_REL_TOL: f64 = 1e-9;

/// Whether a hypothesis holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum Verdict {
    Holds,
    Fails,
    /// The hypothesis is not meaningful for these parameters.
    Undefined,
    /// Only structural hypotheses exist and no hypergraph was supplied.
    Unchecked,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Holds
        } else {
            Verdict::Fails
        }
    }
}

/// `Upper`: the measured value should not exceed the bound. `Lower`: it
/// should not fall below it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize), serde(rename_all = "snake_case"))]
pub enum Direction {
    Upper,
    Lower,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct Param {
    pub name: String,
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SideCondition {
    pub name: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct BoundReport {
    pub name: String,
    pub params: Vec<Param>,
    pub bound_value: f64,
    pub direction: Direction,
    pub measured: Option<f64>,
    pub hypothesis: Verdict,
    pub satisfied: Option<bool>,
    /// `bound - measured` for upper bounds, `measured - bound` for lower.
    pub slack: Option<f64>,
    pub tolerance: f64,
    pub side_conditions: Vec<SideCondition>,
}

impl BoundReport {
    pub fn new(name: &str, bound_value: f64, direction: Direction) -> Self {
        Self {
            name: name.to_string(),
            params: Vec::new(),
            bound_value,
            direction,
            measured: None,
            hypothesis: Verdict::Unchecked,
            satisfied: None,
            slack: None,
            tolerance: RHO_TOL,
            side_conditions: Vec::new(),
        }
    }

    pub fn param(mut self, name: &str, value: f64) -> Self {
        self.params.push(Param {
            name: name.to_string(),
            value,
        });
        self
    }

    pub fn side_condition(mut self, name: &str, holds: bool) -> Self {
        self.side_conditions.push(SideCondition {
            name: name.to_string(),
            holds,
        });
        self
    }

    pub fn hypothesis(mut self, v: Verdict) -> Self {
        self.hypothesis = v;
        self
    }

    pub fn tolerance(mut self, tol: f64) -> Self {
        self.tolerance = tol;
        self
    }

    /// Records `value` and decides satisfaction with the report's tolerance.
    pub fn measure(&mut self, value: f64) {
        let slack = self.signed_slack(value);
        self.record(value, slack >= -self.tolerance);
    }

    /// Records `value` with a satisfaction verdict decided elsewhere (exactly).
    pub fn record(&mut self, value: f64, satisfied: bool) {
        self.slack = Some(self.signed_slack(value));
        self.measured = Some(value);
        self.satisfied = Some(satisfied);
    }

    fn signed_slack(&self, value: f64) -> f64 {
        match self.direction {
            Direction::Upper => self.bound_value - value,
            Direction::Lower => value - self.bound_value,
        }
    }

    pub fn hypothesis_ok(&self) -> bool {
        self.hypothesis == Verdict::Holds
    }

    /// The hypothesis holds but the conclusion does not.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_ok() && self.satisfied == Some(false)
    }

    pub fn param_value(&self, name: &str) -> Option<f64> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

fn invalid(msg: String) -> Error {
    Error::InvalidParameter(msg)
}

fn fpow(x: f64, e: f64) -> f64 {
    libm::pow(x, e)
}

/// Value of `q^{1/2} + p^{1/2} q^{1/4}` and whether `√q ≥ p/2` holds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootBound {
    pub value: f64,
    pub hypothesis: bool,
}

/// Upper bound on the positive root of `x² − px − q`, valid when `√q ≥ p/2`.
pub fn fact_root1(p: f64, q: f64) -> Result<RootBound> {
    if !(p > 0.0 && q > 0.0) {
        return Err(invalid(format!("need p > 0 and q > 0, got p={p}, q={q}")));
    }
    Ok(RootBound {
        value: libm::sqrt(q) + libm::sqrt(p) * fpow(q, 0.25),
        hypothesis: 4.0 * q >= p * p,
    })
}

/// `p + q/p`, an upper bound on the positive root of `x² − px − q`.
pub fn fact_root2(p: f64, q: f64) -> Result<f64> {
    if !(p > 0.0) || !(q >= 0.0) {
        return Err(invalid(format!("need p > 0 and q >= 0, got p={p}, q={q}")));
    }
    Ok(p + q / p)
}

fn check_finite(name: &str, x: f64) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(invalid(format!("{name} must be finite, got {x}")))
    }
}

/// Conclusion `ρ² − Pρ/(r−1) − Q/(r−1) ≤ 0` as a report with bound 0. The
/// tolerance scales with the magnitude of the terms.
fn quadratic_report(name: &str, h: &UniformHypergraph, p: f64, q: f64) -> Result<BoundReport> {
    let rho = spectral_radius(h)?.converged_rho()?;
    let r1 = (h.r() - 1) as f64;
    let (a, b, c) = (rho * rho, p * rho / r1, q / r1);
    let tol = RHO_TOL * [1.0, a, libm::fabs(b), libm::fabs(c)].into_iter().fold(0.0, f64::max);
    let mut rep = BoundReport::new(name, 0.0, Direction::Upper)
        .param("P", p)
        .param("Q", q)
        .param("r", h.r() as f64)
        .param("n", h.n() as f64)
        .param("rho", rho)
        .tolerance(tol);
    rep.measure(a - b - c);
    Ok(rep)
}

fn walk_tables(h: &UniformHypergraph) -> Result<(Vec<f64>, Vec<f64>)> {
    let w1 = walk_totals(h, 1)?.into_iter().map(|w| w as f64).collect();
    let w2 = walk_totals(h, 2)?.into_iter().map(|w| w as f64).collect();
    Ok((w1, w2))
}

/// Hypothesis `w₂(u) ≤ P w₁(u) + (r−1)Q` for all `u`; conclusion the quadratic
/// inequality in `ρ`.
pub fn walk_quadratic_check(h: &UniformHypergraph, p: f64, q: f64) -> Result<BoundReport> {
    check_finite("P", p)?;
    check_finite("Q", q)?;
    let (w1, w2) = walk_tables(h)?;
    let r1 = (h.r() - 1) as f64;
    let holds = w1.iter().zip(&w2).all(|(&a, &b)| {
        let rhs = p * a + r1 * q;
        b <= rhs + 1e-12 * libm::fabs(rhs)
    });
    Ok(quadratic_report("walk_quadratic", h, p, q)?.hypothesis(holds.into()))
}

/// Smallest `Q ≥ 0` for which the walk hypothesis holds with the given `P`.
pub fn fit_min_q(h: &UniformHypergraph, p: f64) -> Result<f64> {
    check_finite("P", p)?;
    let (w1, w2) = walk_tables(h)?;
    let r1 = (h.r() - 1) as f64;
    Ok(w1
        .iter()
        .zip(&w2)
        .map(|(&a, &b)| (b - p * a) / r1)
        .fold(0.0, f64::max))
}

/// `Σ_{u ∈ N(v)} d(u)` for every `v`.
pub fn neighbor_degree_sums(h: &UniformHypergraph) -> Vec<u64> {
    let d = h.degrees();
    (0..h.n())
        .map(|v| {
            h.neighbors(v)
                .expect("vertex in range")
                .iter()
                .map(|&u| d[u] as u64)
                .sum()
        })
        .collect()
}

/// Linear `H`: hypothesis `Σ_{u∈N(v)} d(u) ≤ P d(v) + Q` for all `v`;
/// conclusion the same quadratic inequality in `ρ`.
pub fn degree_quadratic_check(h: &UniformHypergraph, p: f64, q: f64) -> Result<BoundReport> {
    check_finite("P", p)?;
    check_finite("Q", q)?;
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    let d = h.degrees();
    let holds = neighbor_degree_sums(h).iter().zip(&d).all(|(&s, &dv)| {
        let rhs = p * dv as f64 + q;
        s as f64 <= rhs + 1e-12 * libm::fabs(rhs)
    });
    Ok(quadratic_report("degree_quadratic", h, p, q)?.hypothesis(holds.into()))
}

/// `2r² − 4r + 1`.
pub fn k2t_coefficient(r: usize) -> usize {
    2 * r * r - 4 * r + 1
}

/// Largest `(r−1)(Σ_{u∈N(v)} d(u) − c·t·d(v)) − (t−1)n` over `v`, with
/// `c = 2r²−4r+1`. Nonpositive iff the degree inequality holds everywhere.
fn k2t_excess(h: &UniformHypergraph, t: usize) -> Result<i128> {
    if t < 2 {
        return Err(invalid(format!("t must be at least 2, got {t}")));
    }
    if !h.is_linear() {
        return Err(Error::NotLinear);
    }
    let (r1, c) = ((h.r() - 1) as i128, k2t_coefficient(h.r()) as i128);
    let (t, n) = (t as i128, h.n() as i128);
    let d = h.degrees();
    Ok(neighbor_degree_sums(h)
        .iter()
        .zip(&d)
        .map(|(&s, &dv)| r1 * (s as i128 - c * t * dv as i128) - (t - 1) * n)
        .max()
        .unwrap_or(i128::MIN))
}

/// `Σ_{u∈N(v)} d(u) ≤ (2r²−4r+1) t d(v) + (t−1)n/(r−1)` for every `v`, decided
/// in integer arithmetic.
pub fn k2t_degree_hypothesis(h: &UniformHypergraph, t: usize) -> Result<bool> {
    Ok(k2t_excess(h, t)? <= 0)
}

/// Report form of [`k2t_degree_hypothesis`]: measured is the worst excess
/// divided by `r−1`, bound 0. The hypothesis is linearity plus Berge-`K_{2,t}`
/// freeness.
pub fn k2t_degree_check(h: &UniformHypergraph, t: usize) -> Result<BoundReport> {
    let excess = k2t_excess(h, t)?;
    let free = contains_berge(h, &PatternGraph::complete_bipartite(2, t)?).is_none();
    let mut rep = BoundReport::new("k2t_degree", 0.0, Direction::Upper)
        .param("r", h.r() as f64)
        .param("n", h.n() as f64)
        .param("t", t as f64)
        .side_condition("linear", true)
        .side_condition(&format!("berge_k2_{t}_free"), free)
        .hypothesis(free.into());
    let measured = if excess == i128::MIN {
        0.0
    } else {
        excess as f64 / (h.r() - 1) as f64
    };
    rep.record(measured, excess <= 0);
    Ok(rep)
}

/// Spectral bound for Berge-`K_{2,t}`-free linear hypergraphs.
///
/// The hypothesis verdict is the threshold `n ≥ (2r²−4r+1)²/(4(t−2))`, which is
/// undefined at `t = 2`. The side condition `root_hypothesis` records whether
/// `√q ≥ p/2` holds for `p = (2r²−4r+1)t/(r−1)` and `q = (t−1)n/(r−1)²`, which
/// is what the root estimate needs.
pub fn spex_k2t_bound(n: usize, r: usize, t: usize) -> Result<BoundReport> {
    if t < 2 || r < 2 || n < 1 {
        return Err(invalid(format!(
            "need n >= 1, r >= 2, t >= 2; got n={n}, r={r}, t={t}"
        )));
    }
    let c = k2t_coefficient(r) as u128;
    let (nf, rf, tf) = (n as f64, r as f64, t as f64);
    let cf = c as f64;
    let bound = libm::sqrt(tf - 1.0) / (rf - 1.0) * libm::sqrt(nf)
        + libm::sqrt(cf) * fpow(tf - 1.0, 0.25) * libm::sqrt(tf) / (rf - 1.0) * fpow(nf, 0.25);
    let hypothesis = if t == 2 {
        Verdict::Undefined
    } else {
        (4 * (t as u128 - 2) * n as u128 >= c * c).into()
    };
    // 4q ≥ p² after clearing (r−1)²
    let root_ok = 4 * (t as u128 - 1) * n as u128 >= c * c * (t as u128) * (t as u128);
    let mut rep = BoundReport::new("spex_k2t", bound, Direction::Upper)
        .param("n", nf)
        .param("r", rf)
        .param("t", tf)
        .hypothesis(hypothesis)
        .side_condition("root_hypothesis", root_ok);
    if t > 2 {
        rep = rep.param("threshold", cf * cf / (4.0 * (tf - 2.0)));
    }
    Ok(rep)
}

/// [`spex_k2t_bound`] at `H`'s parameters with `ρ(H)` measured. The verdict
/// combines the threshold with linearity and Berge-`K_{2,t}` freeness.
pub fn spex_k2t_check(h: &UniformHypergraph, t: usize) -> Result<BoundReport> {
    let mut rep = spex_k2t_bound(h.n(), h.r(), t)?;
    let k2t = (format!("k2_{t}"), PatternGraph::complete_bipartite(2, t)?);
    let structural = structural_conditions(h, &[k2t]);
    rep = attach_structural(rep, &structural);
    rep.measure(spectral_radius(h)?.converged_rho()?);
    Ok(rep)
}

fn check_st(s: usize, t: usize) -> Result<()> {
    if s < 2 || t < 2 {
        return Err(invalid(format!("need s >= 2 and t >= 2, got s={s}, t={t}")));
    }
    Ok(())
}

/// `(t−k−1)^{1/s}/(r−1)·m·n^{1−1/s} + (s−1)/(r−1)·n^{1+k/s} + k·m` for
/// `0 ≤ k ≤ t−2`.
pub fn hm_edge_bound(m: usize, n: usize, r: usize, s: usize, t: usize, k: usize) -> Result<f64> {
    check_st(s, t)?;
    if r < 2 || n < 1 {
        return Err(invalid(format!("need r >= 2 and n >= 1, got r={r}, n={n}")));
    }
    if k > t - 2 {
        return Err(invalid(format!("k must be in 0..={}, got {k}", t - 2)));
    }
    let (mf, nf, r1, sf) = (m as f64, n as f64, (r - 1) as f64, s as f64);
    let kf = k as f64;
    Ok(fpow((t - k - 1) as f64, 1.0 / sf) / r1 * mf * fpow(nf, 1.0 - 1.0 / sf)
        + (sf - 1.0) / r1 * fpow(nf, 1.0 + kf / sf)
        + kf * mf)
}

/// The `k = 0` case written out: `(t−1)^{1/s}/(r−1)·m·n^{1−1/s} + (s−1)/(r−1)·n`.
pub fn hm_edge_bound_base(m: usize, n: usize, r: usize, s: usize, t: usize) -> Result<f64> {
    check_st(s, t)?;
    let (mf, nf, r1, sf) = (m as f64, n as f64, (r - 1) as f64, s as f64);
    Ok(fpow((t - 1) as f64, 1.0 / sf) / r1 * mf * fpow(nf, 1.0 - 1.0 / sf) + (sf - 1.0) / r1 * nf)
}

/// The `k = s−2` case written out for `2 ≤ s ≤ t`:
/// `(t−s+1)^{1/s}/(r−1)·m·n^{1−1/s} + (s−1)/(r−1)·n^{2−2/s} + (s−2)m`.
pub fn hm_edge_bound_diagonal(m: usize, n: usize, r: usize, s: usize, t: usize) -> Result<f64> {
    check_st(s, t)?;
    if s > t {
        return Err(invalid(format!("need s <= t, got s={s}, t={t}")));
    }
    let (mf, nf, r1, sf) = (m as f64, n as f64, (r - 1) as f64, s as f64);
    Ok(fpow((t - s + 1) as f64, 1.0 / sf) / r1 * mf * fpow(nf, 1.0 - 1.0 / sf)
        + (sf - 1.0) / r1 * fpow(nf, 2.0 - 2.0 / sf)
        + (sf - 2.0) * mf)
}

/// [`hm_edge_bound`] for an hm-bipartite `H` with `m = |head|` and
/// `n = |mass|`, measuring `e(H)`. Hypotheses: linear, Berge-`C_3`-free, and
/// exact Berge-`K_{s,t}`-free.
pub fn hm_edge_check(
    h: &UniformHypergraph,
    p: &HmBipartition,
    s: usize,
    t: usize,
    k: usize,
) -> Result<BoundReport> {
    if !h.check_hm_bipartite(p)? {
        return Err(Error::NotHmBipartite);
    }
    let (m, n) = (p.head().len(), p.mass().len());
    let bound = hm_edge_bound(m, n, h.r(), s, t, k)?;
    let linear = h.is_linear();
    let c3_free = contains_berge(h, &PatternGraph::cycle(3)?).is_none();
    let exact_free = contains_exact_berge_kst(h, p, s, t)?.is_none();
    let mut rep = BoundReport::new("hm_edge", bound, Direction::Upper)
        .param("m", m as f64)
        .param("n", n as f64)
        .param("r", h.r() as f64)
        .param("s", s as f64)
        .param("t", t as f64)
        .param("k", k as f64)
        .side_condition("linear", linear)
        .side_condition("berge_c3_free", c3_free)
        .side_condition(&format!("exact_berge_k{s}_{t}_free"), exact_free)
        .hypothesis((linear && c3_free && exact_free).into())
        .tolerance(EDGE_REL_TOL * bound.max(1.0));
    rep.measure(h.edge_count() as f64);
    Ok(rep)
}

fn check_s_le_t(s: usize, t: usize) -> Result<()> {
    if s < 2 || s > t {
        return Err(invalid(format!("need 2 <= s <= t, got s={s}, t={t}")));
    }
    Ok(())
}

/// Spectral bound for `{Berge-K_{s,t}, Berge-C_3}`-free linear hypergraphs.
pub fn spex_kst_c3_bound(n: usize, r: usize, s: usize, t: usize) -> Result<BoundReport> {
    let value = spex_kst_c3_value(n, r, s, t)?;
    Ok(BoundReport::new("spex_kst_c3", value, Direction::Upper)
        .param("n", n as f64)
        .param("r", r as f64)
        .param("s", s as f64)
        .param("t", t as f64))
}

fn spex_kst_c3_value(n: usize, r: usize, s: usize, t: usize) -> Result<f64> {
    check_s_le_t(s, t)?;
    if r < 2 || n < 1 {
        return Err(invalid(format!("need r >= 2 and n >= 1, got r={r}, n={n}")));
    }
    let (nf, rf, sf, tf) = (n as f64, r as f64, s as f64, t as f64);
    Ok(if s == 2 {
        let disc = 4.0 * (tf - 1.0) * (nf - 1.0) + (rf - tf) * (rf - tf);
        (libm::sqrt(disc) + rf - tf) / (2.0 * (rf - 1.0))
    } else {
        fpow(tf - sf + 1.0, 1.0 / sf) / (rf - 1.0) * fpow(nf, 1.0 - 1.0 / sf)
            + (sf - 1.0) / (rf - 1.0) * fpow(nf, 1.0 - 2.0 / sf)
            + sf
            - 2.0
    })
}

/// Edge-count bound for `{Berge-K_{s,t}, Berge-C_3}`-free linear hypergraphs.
pub fn ex_kst_c3_bound(n: usize, r: usize, s: usize, t: usize) -> Result<f64> {
    check_s_le_t(s, t)?;
    if r < 2 || n < 1 {
        return Err(invalid(format!("need r >= 2 and n >= 1, got r={r}, n={n}")));
    }
    let (nf, rf, sf, tf) = (n as f64, r as f64, s as f64, t as f64);
    Ok(if s == 2 {
        let disc = 4.0 * (tf - 1.0) * (nf - 1.0) + (rf - tf) * (rf - tf);
        nf * (libm::sqrt(disc) + rf - tf) / (2.0 * rf * (rf - 1.0))
    } else {
        let rr = rf * (rf - 1.0);
        fpow(tf - sf + 1.0, 1.0 / sf) / rr * fpow(nf, 2.0 - 1.0 / sf)
            + (sf - 1.0) / rr * fpow(nf, 2.0 - 2.0 / sf)
            + (sf - 2.0) / rf * nf
    })
}

/// Whether `e` edges respect [`ex_kst_c3_bound`]. Exact for `s = 2`
/// (`2r(r−1)e − n(r−t) ≤ n√D` squared out), relative tolerance otherwise.
pub fn ex_kst_c3_admits(n: usize, r: usize, s: usize, t: usize, e: usize) -> Result<bool> {
    let bound = ex_kst_c3_bound(n, r, s, t)?;
    if s != 2 {
        return Ok(e as f64 <= bound + EDGE_REL_TOL * bound.max(1.0));
    }
    let (n, r, t, e) = (n as i128, r as i128, t as i128, e as i128);
    let lhs = 2 * r * (r - 1) * e - n * (r - t);
    if lhs <= 0 {
        return Ok(true);
    }
    let disc = 4 * (t - 1) * (n - 1) + (r - t) * (r - t);
    Ok(lhs * lhs <= n * n * disc)
}

/// Report form of [`ex_kst_c3_bound`].
pub fn ex_kst_c3_report(n: usize, r: usize, s: usize, t: usize) -> Result<BoundReport> {
    let value = ex_kst_c3_bound(n, r, s, t)?;
    Ok(BoundReport::new("ex_kst_c3", value, Direction::Upper)
        .param("n", n as f64)
        .param("r", r as f64)
        .param("s", s as f64)
        .param("t", t as f64)
        .tolerance(EDGE_REL_TOL * value.max(1.0)))
}

struct Structural {
    linear: bool,
    free: Vec<(String, bool)>,
}

fn structural_conditions(h: &UniformHypergraph, patterns: &[(String, PatternGraph)]) -> Structural {
    Structural {
        linear: h.is_linear(),
        free: patterns
            .iter()
            .map(|(label, f)| (format!("berge_{label}_free"), contains_berge(h, f).is_none()))
            .collect(),
    }
}

fn attach_structural(mut rep: BoundReport, st: &Structural) -> BoundReport {
    rep = rep.side_condition("linear", st.linear);
    let mut all = st.linear;
    for (name, ok) in &st.free {
        rep = rep.side_condition(name, *ok);
        all &= ok;
    }
    rep.hypothesis = match (all, rep.hypothesis) {
        (false, _) => Verdict::Fails,
        (true, Verdict::Unchecked) => Verdict::Holds,
        (true, v) => v,
    };
    rep
}

fn kst_c3_patterns(s: usize, t: usize) -> Result<[(String, PatternGraph); 2]> {
    Ok([
        (format!("k{s}_{t}"), PatternGraph::complete_bipartite(s, t)?),
        ("c3".into(), PatternGraph::cycle(3)?),
    ])
}

/// [`spex_kst_c3_bound`] at `H`'s parameters with `ρ(H)` measured.
pub fn spex_kst_c3_check(h: &UniformHypergraph, s: usize, t: usize) -> Result<BoundReport> {
    let rep = spex_kst_c3_bound(h.n(), h.r(), s, t)?;
    let mut rep = attach_structural(rep, &structural_conditions(h, &kst_c3_patterns(s, t)?));
    rep.measure(spectral_radius(h)?.converged_rho()?);
    Ok(rep)
}

/// [`ex_kst_c3_bound`] at `H`'s parameters with `e(H)` measured.
pub fn ex_kst_c3_check(h: &UniformHypergraph, s: usize, t: usize) -> Result<BoundReport> {
    let rep = ex_kst_c3_report(h.n(), h.r(), s, t)?;
    let mut rep = attach_structural(rep, &structural_conditions(h, &kst_c3_patterns(s, t)?));
    let ok = ex_kst_c3_admits(h.n(), h.r(), s, t, h.edge_count())?;
    rep.record(h.edge_count() as f64, ok);
    Ok(rep)
}

/// `ρ(H) ≥ r·e(H)/n`.
pub fn avg_degree_lower(h: &UniformHypergraph) -> Result<BoundReport> {
    if h.n() == 0 {
        return Err(invalid("need at least one vertex".into()));
    }
    let avg = (h.r() * h.edge_count()) as f64 / h.n() as f64;
    let mut rep = BoundReport::new("avg_degree", avg, Direction::Lower)
        .param("n", h.n() as f64)
        .param("r", h.r() as f64)
        .param("m", h.edge_count() as f64)
        .hypothesis(Verdict::Holds);
    rep.measure(spectral_radius(h)?.converged_rho()?);
    Ok(rep)
}

/// `x(x−1)…(x−k+1)/k!` for real `x`.
pub fn generalized_binomial(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (x - i as f64) / (i + 1) as f64)
}

/// Hypothesis `Σ C(x_i, k) ≤ c·C(x₀, k)`; conclusion
/// `Σ x_i ≤ x₀ c^{1/k} n^{1−1/k} + (k−1)n` with `n = |xs|`.
///
/// The inequality is only valid for `x₀ ≥ k−1`, `c ≥ 0` and `x_i ≥ 0`; outside
/// that domain the hypothesis verdict is `Undefined` and the `domain` side
/// condition fails.
pub fn comb_ineq_check(xs: &[f64], x0: f64, c: f64, k: usize) -> Result<BoundReport> {
    if k < 1 {
        return Err(invalid("k must be at least 1".into()));
    }
    if xs.is_empty() {
        return Err(invalid("need at least one x_i".into()));
    }
    for (i, &x) in xs.iter().enumerate() {
        check_finite(&format!("x_{}", i + 1), x)?;
    }
    check_finite("x0", x0)?;
    check_finite("c", c)?;
    let n = xs.len() as f64;
    let kf = k as f64;
    let in_domain = x0 >= kf - 1.0 && c >= 0.0 && xs.iter().all(|&x| x >= 0.0);
    let lhs: f64 = xs.iter().map(|&x| generalized_binomial(x, k)).sum();
    let rhs = c * generalized_binomial(x0, k);
    let bound = x0 * fpow(c.max(0.0), 1.0 / kf) * fpow(n, 1.0 - 1.0 / kf) + (kf - 1.0) * n;
    let hypothesis = if in_domain {
        (lhs <= rhs).into()
    } else {
        Verdict::Undefined
    };
    let mut rep = BoundReport::new("comb_ineq", bound, Direction::Upper)
        .param("x0", x0)
        .param("c", c)
        .param("k", kf)
        .param("n", n)
        .side_condition("domain", in_domain)
        .hypothesis(hypothesis)
        .tolerance(EDGE_REL_TOL * libm::fabs(bound).max(1.0));
    rep.measure(xs.iter().sum());
    Ok(rep)
}

/// Every evaluator reachable by name, with its parameter names.
pub const FORMULAS: &[(&str, &[&str])] = &[
    ("fact_root1", &["p", "q"]),
    ("fact_root2", &["p", "q"]),
    ("spex_k2t", &["n", "r", "t"]),
    ("hm_edge", &["m", "n", "r", "s", "t", "k"]),
    ("spex_kst_c3", &["n", "r", "s", "t"]),
    ("ex_kst_c3", &["n", "r", "s", "t"]),
];

/// Evaluates a formula by name from `(name, value)` parameters.
pub fn eval_named(name: &str, params: &[(String, f64)]) -> Result<BoundReport> {
    let get = |key: &str| -> Result<f64> {
        params
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| *v)
            .ok_or_else(|| invalid(format!("missing parameter {key} for {name}")))
    };
    let int = |key: &str| -> Result<usize> {
        let v = get(key)?;
        if v < 0.0 || v != libm::trunc(v) || v > u32::MAX as f64 {
            return Err(invalid(format!("{key} must be a nonnegative integer, got {v}")));
        }
        Ok(v as usize)
    };
    let known = FORMULAS
        .iter()
        .find(|(n, _)| *n == name)
        .ok_or_else(|| invalid(format!("unknown bound {name}")))?;
    if let Some((k, _)) = params.iter().find(|(k, _)| !known.1.contains(&k.as_str())) {
        return Err(invalid(format!("unexpected parameter {k} for {name}")));
    }
    match name {
        "fact_root1" => {
            let (p, q) = (get("p")?, get("q")?);
            let rb = fact_root1(p, q)?;
            Ok(BoundReport::new(name, rb.value, Direction::Upper)
                .param("p", p)
                .param("q", q)
                .hypothesis(rb.hypothesis.into()))
        }
        "fact_root2" => {
            let (p, q) = (get("p")?, get("q")?);
            Ok(BoundReport::new(name, fact_root2(p, q)?, Direction::Upper)
                .param("p", p)
                .param("q", q)
                .hypothesis(Verdict::Holds))
        }
        "spex_k2t" => spex_k2t_bound(int("n")?, int("r")?, int("t")?),
        "hm_edge" => {
            let (m, n, r, s, t, k) = (
                int("m")?,
                int("n")?,
                int("r")?,
                int("s")?,
                int("t")?,
                int("k")?,
            );
            let v = hm_edge_bound(m, n, r, s, t, k)?;
            let mut rep = BoundReport::new(name, v, Direction::Upper);
            for (key, val) in [("m", m), ("n", n), ("r", r), ("s", s), ("t", t), ("k", k)] {
                rep = rep.param(key, val as f64);
            }
            Ok(rep)
        }
        "spex_kst_c3" => spex_kst_c3_bound(int("n")?, int("r")?, int("s")?, int("t")?),
        "ex_kst_c3" => ex_kst_c3_report(int("n")?, int("r")?, int("s")?, int("t")?),
        _ => unreachable!("checked against FORMULAS"),
    }
}

/// Exact positive root of `x² − px − q`, used by tests.
#[cfg(test)]
fn root(p: f64, q: f64) -> f64 {
    0.5 * (p + libm::sqrt(p * p + 4.0 * q))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        libm::fabs(a - b) <= tol
    }

    #[test]
    fn root_bounds() {
        let r1 = fact_root1(2.0, 4.0).unwrap();
        assert!(close(r1.value, 4.0, 1e-12) && r1.hypothesis);
        assert!(root(2.0, 4.0) <= r1.value);
        let eq = fact_root1(2.0, 1.0).unwrap();
        assert!(eq.hypothesis);
        assert!(close(eq.value, 1.0 + libm::sqrt(2.0), 1e-12));
        assert!(close(root(2.0, 1.0), eq.value, 1e-12));
        assert!(!fact_root1(4.0, 1.0).unwrap().hypothesis);
        assert!(fact_root1(0.0, 1.0).is_err());

        assert_eq!(fact_root2(2.0, 0.0).unwrap(), 2.0);
        assert_eq!(fact_root2(2.0, 3.0).unwrap(), 3.5);
        assert_eq!(fact_root2(1.0, 1.0).unwrap(), 2.0);
        assert!(fact_root2(0.0, 1.0).is_err());
        assert!(fact_root2(1.0, -1.0).is_err());
    }

    #[test]
    fn root_bounds_on_grid() {
        for i in 1..=100 {
            for j in 1..=100 {
                let p = i as f64 * 0.37;
                let q = j as f64 * j as f64 * 0.11;
                let x = root(p, q);
                let b1 = fact_root1(p, q).unwrap();
                if b1.hypothesis {
                    assert!(x <= b1.value * (1.0 + 1e-12), "p={p} q={q}");
                }
                assert!(x <= fact_root2(p, q).unwrap() * (1.0 + 1e-12));
            }
        }
    }

    #[test]
    fn walk_quadratic_examples() {
        let k3 = UniformHypergraph::graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        let rep = walk_quadratic_check(&k3, 2.0, 0.0).unwrap();
        assert!(rep.hypothesis_ok());
        assert_eq!(rep.satisfied, Some(true));
        assert!(close(rep.measured.unwrap(), 0.0, 1e-8));

        let f = UniformHypergraph::fano();
        let p = (f.max_degree() * 2) as f64;
        let rep = walk_quadratic_check(&f, p, 1.0).unwrap();
        assert!(rep.hypothesis_ok() && rep.satisfied == Some(true));

        let star = UniformHypergraph::loose_star(3, 3).unwrap();
        let q = fit_min_q(&star, 0.0).unwrap();
        let w2 = walk_totals(&star, 2).unwrap();
        let max_w2 = *w2.iter().max().unwrap() as f64;
        assert!(close(q, max_w2 / 2.0, 1e-12));
        let rep = walk_quadratic_check(&star, 0.0, q).unwrap();
        assert!(rep.hypothesis_ok() && rep.satisfied == Some(true));
    }

    #[test]
    fn fit_min_q_examples() {
        let k3 = UniformHypergraph::graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(fit_min_q(&k3, 2.0).unwrap(), 0.0);
        let e = UniformHypergraph::new(4, 4, [[0, 1, 2, 3]]).unwrap();
        assert_eq!(fit_min_q(&e, 3.0).unwrap(), 0.0);
        assert_eq!(fit_min_q(&k3, 1e6).unwrap(), 0.0);
    }

    #[test]
    fn degree_quadratic_examples() {
        let star = UniformHypergraph::loose_star(3, 3).unwrap();
        let rep = degree_quadratic_check(&star, 2.0, 0.0).unwrap();
        assert_eq!(rep.hypothesis, Verdict::Fails);
        let f = UniformHypergraph::fano();
        let rep = degree_quadratic_check(&f, 6.0, 0.0).unwrap();
        assert!(rep.hypothesis_ok());
        assert_eq!(rep.satisfied, Some(true));
        let nl = UniformHypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3]]).unwrap();
        assert_eq!(degree_quadratic_check(&nl, 1.0, 1.0), Err(Error::NotLinear));
    }

    #[test]
    fn k2t_examples() {
        let e = UniformHypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert!(k2t_degree_hypothesis(&e, 2).unwrap());
        let star = UniformHypergraph::loose_star(3, 3).unwrap();
        assert!(k2t_degree_hypothesis(&star, 2).unwrap());
        assert_eq!(k2t_coefficient(3), 7);
        assert!(k2t_degree_hypothesis(&e, 1).is_err());
    }

    #[test]
    fn spex_k2t_examples() {
        let rep = spex_k2t_bound(13, 3, 3).unwrap();
        let expect = libm::sqrt(2.0) / 2.0 * libm::sqrt(13.0)
            + libm::sqrt(7.0) * fpow(2.0, 0.25) * libm::sqrt(3.0) / 2.0 * fpow(13.0, 0.25);
        assert!(close(rep.bound_value, expect, 1e-12));
        assert!(close(rep.bound_value, 7.720, 5e-3), "{}", rep.bound_value);
        assert_eq!(rep.hypothesis, Verdict::Holds);
        assert_eq!(spex_k2t_bound(12, 3, 3).unwrap().hypothesis, Verdict::Fails);
        assert_eq!(spex_k2t_bound(12, 3, 2).unwrap().hypothesis, Verdict::Undefined);
        assert!(spex_k2t_bound(12, 3, 1).is_err());
        let a = spex_k2t_bound(1 << 40, 3, 3).unwrap().bound_value;
        let b = spex_k2t_bound(1 << 42, 3, 3).unwrap().bound_value;
        assert!(close(b / a, 2.0, 1e-2));
    }

    #[test]
    fn hm_edge_examples() {
        assert!(close(hm_edge_bound(4, 9, 3, 2, 3, 1).unwrap(), 23.5, 1e-12));
        assert!(close(hm_edge_bound(0, 9, 3, 2, 3, 1).unwrap(), 13.5, 1e-12));
        for (m, n) in [(1, 1), (3, 7), (10, 50)] {
            for (s, t) in [(2, 2), (2, 5), (3, 4), (4, 4)] {
                let base = hm_edge_bound_base(m, n, 3, s, t).unwrap();
                assert!(close(hm_edge_bound(m, n, 3, s, t, 0).unwrap(), base, 1e-9));
                let diag = hm_edge_bound_diagonal(m, n, 3, s, t).unwrap();
                assert!(close(hm_edge_bound(m, n, 3, s, t, s - 2).unwrap(), diag, 1e-9));
            }
        }
        assert!(hm_edge_bound(1, 1, 3, 2, 3, 2).is_err());
        assert!(hm_edge_bound(1, 1, 3, 1, 3, 0).is_err());
    }

    #[test]
    fn kst_c3_examples() {
        assert!(close(spex_kst_c3_bound(7, 3, 2, 2).unwrap().bound_value, 1.5, 1e-12));
        assert!(close(spex_kst_c3_bound(1, 3, 2, 2).unwrap().bound_value, 0.5, 1e-12));
        assert!(close(spex_kst_c3_bound(1000, 4, 3, 3).unwrap().bound_value, 41.0, 1e-9));
        assert!(close(ex_kst_c3_bound(7, 3, 2, 2).unwrap(), 3.5, 1e-12));
        assert!(close(ex_kst_c3_bound(1, 3, 3, 3).unwrap(), 5.0 / 6.0, 1e-12));
        assert!(spex_kst_c3_bound(7, 3, 3, 2).is_err());
        assert!(ex_kst_c3_bound(7, 3, 1, 2).is_err());
        assert!(ex_kst_c3_admits(7, 3, 2, 2, 3).unwrap());
        assert!(!ex_kst_c3_admits(7, 3, 2, 2, 4).unwrap());
    }

    #[test]
    fn avg_degree_examples() {
        let f = avg_degree_lower(&UniformHypergraph::fano()).unwrap();
        assert_eq!(f.satisfied, Some(true));
        assert!(close(f.bound_value, 3.0, 1e-12));
        let star = avg_degree_lower(&UniformHypergraph::loose_star(3, 3).unwrap()).unwrap();
        assert_eq!(star.satisfied, Some(true));
        assert!(close(star.bound_value, 9.0 / 7.0, 1e-12));
        let empty = avg_degree_lower(&UniformHypergraph::empty(3, 4).unwrap()).unwrap();
        assert_eq!(empty.satisfied, Some(true));
    }

    #[test]
    fn comb_ineq_examples() {
        let rep = comb_ineq_check(&[2.0, 2.0], 2.0, 2.0, 1).unwrap();
        assert!(rep.hypothesis_ok());
        assert!(close(rep.bound_value, 4.0, 1e-12));
        assert_eq!(rep.satisfied, Some(true));
        let rep = comb_ineq_check(&[3.0, 3.0, 3.0], 3.0, 3.0, 2).unwrap();
        assert!(rep.hypothesis_ok());
        assert!(close(rep.bound_value, 12.0, 1e-12));
        assert_eq!(rep.satisfied, Some(true));
        let out = comb_ineq_check(&[1.0, 1.0], -1.0, 1.0, 2).unwrap();
        assert_eq!(out.hypothesis, Verdict::Undefined);
        assert!(comb_ineq_check(&[1.0], 1.0, 1.0, 0).is_err());
    }

    #[test]
    fn named_evaluation() {
        let p = |pairs: &[(&str, f64)]| -> Vec<(String, f64)> {
            pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
        };
        let rep = eval_named(
            "spex_kst_c3",
            &p(&[("n", 7.0), ("r", 3.0), ("s", 2.0), ("t", 2.0)]),
        )
        .unwrap();
        assert!(close(rep.bound_value, 1.5, 1e-12));
        assert!(eval_named("nope", &[]).is_err());
        assert!(eval_named("spex_k2t", &p(&[("n", 7.0), ("r", 3.0)])).is_err());
        assert!(eval_named("spex_k2t", &p(&[("n", 7.5), ("r", 3.0), ("t", 2.0)])).is_err());
        assert!(eval_named("fact_root2", &p(&[("p", 1.0), ("q", 1.0), ("z", 0.0)])).is_err());
    }
}
