//! Exhaustive search over small (linear) uniform hypergraphs avoiding Berge
//! patterns, random linear generation, and corpus-wide bound verification.
//!
//! Isomorphism classes are generated by canonical deletion: a child `C = P + e`
//! is kept only when `C` minus its canonically last edge is isomorphic to `P`,
//! and children of one parent are deduplicated by canonical form. Every class
//! satisfying a hereditary constraint (linearity, Berge-freeness, exact
//! Berge-freeness, fixed head/mass structure) then appears exactly once.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::berge::{contains_berge, contains_exact_berge_kst, PatternGraph};
use crate::bounds::{
    avg_degree_lower, ex_kst_c3_check, k2t_degree_check, spex_k2t_check, spex_kst_c3_check,
    walk_quadratic_check, BoundReport,
};
use crate::canon::canonical_labeling_colored;
use crate::error::{Error, Result};
use crate::hypergraph::{HmBipartition, UniformHypergraph};
use crate::shadow::{c3free_neighborhood_structure, check_shadow_bound};
use crate::spectral::spectral_radius;

/// Largest `n` accepted for exhaustive search.
pub const MAX_SEARCH_VERTICES: usize = 12;
/// Largest number of candidate edges accepted for exhaustive search.
pub const MAX_CANDIDATE_EDGES: usize = 5000;
/// Ties in the spectral objective are decided with this absolute tolerance.
pub const OBJECTIVE_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "snake_case"))]
pub enum Objective {
    #[default]
    Edges,
    SpectralRadius,
}

/// Head/mass constraint: only edges meeting `head` exactly once are allowed,
/// and no Berge-`K_{s,t}` may have its `s`-side in the head.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExactForbidden {
    pub head: Vec<usize>,
    pub s: usize,
    pub t: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchSpec {
    pub n: usize,
    pub r: usize,
    pub linear: bool,
    pub forbidden: Vec<PatternGraph>,
    pub exact_forbidden: Option<ExactForbidden>,
    pub objective: Objective,
    /// Stop after this many tree nodes.
    pub node_budget: Option<u64>,
    /// Do not grow beyond this many edges.
    pub max_edges: Option<usize>,
    /// Reject pattern-containing children immediately. When false, patterns
    /// are only checked where the objective is evaluated.
    pub prune: bool,
    /// Keep at most this many optimal witnesses (the lexicographically least).
    pub witness_limit: usize,
}

impl SearchSpec {
    pub fn new(n: usize, r: usize) -> Self {
        Self {
            n,
            r,
            linear: false,
            forbidden: Vec::new(),
            exact_forbidden: None,
            objective: Objective::Edges,
            node_budget: None,
            max_edges: None,
            prune: true,
            witness_limit: 16,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct SearchResult {
    pub optimum: f64,
    /// Canonical forms attaining the optimum, sorted, at most `witness_limit`.
    pub witnesses: Vec<UniformHypergraph>,
    /// Number of optimal classes found, including those not kept.
    pub witness_count: u64,
    pub nodes: u64,
    /// Objective evaluations (spectral radius computations for `rho`).
    pub evaluated: u64,
    pub exhaustive: bool,
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| {
        acc.saturating_mul((n - i) as u128) / (i as u128 + 1)
    })
}

fn r_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] < n - r + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// The generation tree for a [`SearchSpec`].
pub struct Generator {
    spec: SearchSpec,
    candidates: Vec<Vec<usize>>,
    colors: Vec<u32>,
    partition: Option<HmBipartition>,
}

impl Generator {
    pub fn new(spec: &SearchSpec) -> Result<Self> {
        if spec.r < 2 {
            return Err(Error::InvalidUniformity(spec.r));
        }
        if spec.n > MAX_SEARCH_VERTICES {
            return Err(Error::CapacityExceeded {
                what: "search vertex count",
                limit: MAX_SEARCH_VERTICES,
            });
        }
        if binomial(spec.n, spec.r) > MAX_CANDIDATE_EDGES as u128 {
            return Err(Error::CapacityExceeded {
                what: "candidate edge count",
                limit: MAX_CANDIDATE_EDGES,
            });
        }
        if spec.node_budget == Some(0) {
            return Err(Error::InvalidParameter("node budget must be positive".into()));
        }
        let partition = match &spec.exact_forbidden {
            Some(x) => {
                if x.s < 1 || x.t < 1 {
                    return Err(Error::InvalidParameter(format!(
                        "exact pattern needs s, t >= 1, got {}, {}",
                        x.s, x.t
                    )));
                }
                Some(HmBipartition::new(spec.n, &x.head)?)
            }
            None => None,
        };
        let colors: Vec<u32> = (0..spec.n)
            .map(|v| match &partition {
                Some(p) if !p.is_head(v) => 1,
                _ => 0,
            })
            .collect();
        let candidates = r_subsets(spec.n, spec.r)
            .into_iter()
            .filter(|e| match &partition {
                Some(p) => e.iter().filter(|&&v| p.is_head(v)).count() == 1,
                None => true,
            })
            .collect();
        Ok(Self {
            spec: spec.clone(),
            candidates,
            colors,
            partition,
        })
    }

    pub fn spec(&self) -> &SearchSpec {
        &self.spec
    }

    pub fn root(&self) -> UniformHypergraph {
        UniformHypergraph::empty(self.spec.r, self.spec.n).expect("uniformity checked")
    }

    /// Canonical form respecting the head/mass coloring.
    pub fn canonical(&self, h: &UniformHypergraph) -> Result<UniformHypergraph> {
        Ok(canonical_labeling_colored(h, &self.colors)?.form)
    }

    /// All constraints: linearity (if required), no forbidden Berge pattern,
    /// and no exact Berge-`K_{s,t}`.
    pub fn satisfies(&self, h: &UniformHypergraph) -> Result<bool> {
        if self.spec.linear && !h.is_linear() {
            return Ok(false);
        }
        self.pattern_free(h)
    }

    fn pattern_free(&self, h: &UniformHypergraph) -> Result<bool> {
        if self.spec.forbidden.iter().any(|f| contains_berge(h, f).is_some()) {
            return Ok(false);
        }
        if let (Some(x), Some(p)) = (&self.spec.exact_forbidden, &self.partition) {
            if contains_exact_berge_kst(h, p, x.s, x.t)?.is_some() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn covered_pairs(&self, h: &UniformHypergraph) -> Vec<bool> {
        let n = self.spec.n;
        let mut covered = vec![false; n * n];
        for e in h.edges() {
            for (i, &a) in e.iter().enumerate() {
                for &b in &e[i + 1..] {
                    covered[a * n + b] = true;
                }
            }
        }
        covered
    }

    /// Candidate edges that can be added without breaking linearity.
    fn extensions<'a>(&'a self, h: &'a UniformHypergraph) -> impl Iterator<Item = &'a [usize]> + 'a {
        let n = self.spec.n;
        let covered = if self.spec.linear {
            self.covered_pairs(h)
        } else {
            Vec::new()
        };
        self.candidates.iter().map(|e| e.as_slice()).filter(move |e| {
            if h.find_edge(e).is_some() {
                return false;
            }
            !self.spec.linear
                || e.iter()
                    .enumerate()
                    .all(|(i, &a)| e[i + 1..].iter().all(|&b| !covered[a * n + b]))
        })
    }

    fn at_edge_cap(&self, h: &UniformHypergraph) -> bool {
        self.spec.max_edges.is_some_and(|m| h.edge_count() >= m)
    }

    /// Children of `h` in the generation tree; `canon` is `h`'s canonical form.
    pub fn children(
        &self,
        h: &UniformHypergraph,
        canon: &UniformHypergraph,
    ) -> Result<Vec<UniformHypergraph>> {
        if self.at_edge_cap(h) {
            return Ok(Vec::new());
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in self.extensions(h) {
            let child = h.with_edge(e)?;
            let lab = canonical_labeling_colored(&child, &self.colors)?;
            let last = lab.form.edge(lab.form.edge_count() - 1);
            let star = child
                .edges()
                .position(|f| {
                    let mut img: Vec<usize> = f.iter().map(|&v| lab.labeling[v]).collect();
                    img.sort_unstable();
                    img == last
                })
                .expect("canonical form is a relabeling");
            let accept = child.edge(star) == e
                || self.canonical(&child.without_edge(star))? == *canon;
            if !accept || !seen.insert(lab.form) {
                continue;
            }
            if self.spec.prune && !self.pattern_free(&child)? {
                continue;
            }
            out.push(child);
        }
        Ok(out)
    }

    fn has_valid_extension(&self, h: &UniformHypergraph) -> Result<bool> {
        for e in self.extensions(h) {
            if self.satisfies(&h.with_edge(e)?)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn accumulator(&self) -> Accumulator {
        Accumulator {
            objective: self.spec.objective,
            best: None,
            witnesses: BTreeSet::new(),
            witness_count: 0,
            witness_limit: self.spec.witness_limit,
            nodes: 0,
            evaluated: 0,
        }
    }

    /// Records `h` in `acc` and returns its children.
    pub fn process(&self, h: &UniformHypergraph, acc: &mut Accumulator) -> Result<Vec<UniformHypergraph>> {
        acc.nodes += 1;
        let canon = self.canonical(h)?;
        let children = self.children(h, &canon)?;
        let valid = if self.spec.prune {
            // the root is trivially valid and children were filtered
            true
        } else {
            self.satisfies(h)?
        };
        if !valid {
            return Ok(children);
        }
        match self.spec.objective {
            Objective::Edges => {
                acc.evaluated += 1;
                acc.offer(h.edge_count() as f64, canon);
            }
            Objective::SpectralRadius => {
                // ρ never decreases when an edge is added, so only maximal
                // hypergraphs need evaluating.
                let maximal = self.at_edge_cap(h)
                    || if self.spec.prune && !children.is_empty() {
                        false
                    } else {
                        !self.has_valid_extension(h)?
                    };
                // ρ ≤ Δ rules out hypergraphs that cannot reach the incumbent.
                let hopeless = acc
                    .best
                    .is_some_and(|b| (h.max_degree() as f64) < b - OBJECTIVE_TOL);
                if maximal && !hopeless && h.n() > 0 {
                    acc.evaluated += 1;
                    let rho = spectral_radius(h)?.converged_rho()?;
                    acc.offer(rho, canon);
                }
            }
        }
        Ok(children)
    }

    /// Depth-first search below `root` (inclusive). `stop` sees the running
    /// node count before each node and aborts the search by returning true.
    /// Returns whether the subtree was completed.
    pub fn run_subtree(
        &self,
        root: UniformHypergraph,
        acc: &mut Accumulator,
        stop: &mut dyn FnMut(u64) -> bool,
    ) -> Result<bool> {
        let mut stack = vec![root];
        while let Some(node) = stack.pop() {
            if stop(acc.nodes) {
                return Ok(false);
            }
            let mut children = self.process(&node, acc)?;
            children.reverse();
            stack.extend(children);
        }
        Ok(true)
    }
}

/// Running optimum and witnesses of a (partial) search.
#[derive(Clone, Debug)]
pub struct Accumulator {
    objective: Objective,
    best: Option<f64>,
    witnesses: BTreeSet<UniformHypergraph>,
    witness_count: u64,
    witness_limit: usize,
    pub nodes: u64,
    pub evaluated: u64,
}

impl Accumulator {
    pub fn best(&self) -> Option<f64> {
        self.best
    }

    fn tol(&self) -> f64 {
        match self.objective {
            Objective::Edges => 0.0,
            Objective::SpectralRadius => OBJECTIVE_TOL,
        }
    }

    fn offer(&mut self, value: f64, form: UniformHypergraph) {
        let tol = self.tol();
        match self.best {
            Some(b) if value < b - tol => return,
            Some(b) if value <= b + tol => {
                self.best = Some(b.max(value));
            }
            _ => {
                self.best = Some(value);
                self.witnesses.clear();
                self.witness_count = 0;
            }
        }
        self.witness_count += 1;
        self.witnesses.insert(form);
        self.truncate();
    }

    fn truncate(&mut self) {
        while self.witnesses.len() > self.witness_limit {
            self.witnesses.pop_last();
        }
    }

    /// Combines results of disjoint subtrees.
    pub fn merge(&mut self, other: Accumulator) {
        self.nodes += other.nodes;
        self.evaluated += other.evaluated;
        let tol = self.tol();
        match (self.best, other.best) {
            (_, None) => {}
            (None, Some(_)) => {
                self.best = other.best;
                self.witnesses = other.witnesses;
                self.witness_count = other.witness_count;
            }
            (Some(a), Some(b)) if b > a + tol => {
                self.best = Some(b);
                self.witnesses = other.witnesses;
                self.witness_count = other.witness_count;
            }
            (Some(a), Some(b)) if b >= a - tol => {
                self.best = Some(a.max(b));
                self.witnesses.extend(other.witnesses);
                self.witness_count += other.witness_count;
                self.truncate();
            }
            _ => {}
        }
    }

    pub fn finish(self, exhaustive: bool) -> SearchResult {
        SearchResult {
            optimum: self.best.unwrap_or(0.0),
            witnesses: self.witnesses.into_iter().collect(),
            witness_count: self.witness_count,
            nodes: self.nodes,
            evaluated: self.evaluated,
            exhaustive,
        }
    }
}

/// Serial exhaustive search.
pub fn enumerate_extremal(spec: &SearchSpec) -> Result<SearchResult> {
    let gen = Generator::new(spec)?;
    let mut acc = gen.accumulator();
    let budget = spec.node_budget;
    let done = gen.run_subtree(gen.root(), &mut acc, &mut |nodes| {
        budget.is_some_and(|b| nodes >= b)
    })?;
    Ok(acc.finish(done))
}

/// Calls `f` on one representative of every isomorphism class satisfying the
/// spec's constraints (in generation order) until it returns false. Returns
/// whether the enumeration ran to completion.
pub fn for_each_class<F>(spec: &SearchSpec, mut f: F) -> Result<bool>
where
    F: FnMut(&UniformHypergraph) -> bool,
{
    let gen = Generator::new(spec)?;
    let mut stack = vec![gen.root()];
    while let Some(node) = stack.pop() {
        if (spec.prune || gen.satisfies(&node)?) && !f(&node) {
            return Ok(false);
        }
        let canon = gen.canonical(&node)?;
        let mut children = gen.children(&node, &canon)?;
        children.reverse();
        stack.extend(children);
    }
    Ok(true)
}

/// Random linear hypergraph: uniform r-subsets are drawn and kept when they
/// preserve linearity, until `max_edges` edges or `50·C(n, r)` consecutive
/// rejections.
pub fn random_linear(n: usize, r: usize, seed: u64, max_edges: usize) -> Result<UniformHypergraph> {
    if r < 2 {
        return Err(Error::InvalidUniformity(r));
    }
    if n < r {
        return UniformHypergraph::empty(r, n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let stall_limit = binomial(n, r).saturating_mul(50);
    let mut covered = BTreeSet::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let mut stall = 0u128;
    while edges.len() < max_edges && stall < stall_limit {
        let mut e = sample(&mut rng, n, r).into_vec();
        e.sort_unstable();
        let pairs: Vec<(usize, usize)> = e
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| e[i + 1..].iter().map(move |&b| (a, b)))
            .collect();
        if pairs.iter().any(|p| covered.contains(p)) {
            stall += 1;
            continue;
        }
        covered.extend(pairs);
        edges.push(e);
        stall = 0;
    }
    UniformHypergraph::new(r, n, edges)
}

/// A named check run by [`verify_corpus`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize), serde(rename_all = "snake_case"))]
pub enum BoundCheck {
    /// Shadow comparison with tolerance 1e-8, including the equality case for
    /// connected inputs.
    Shadow,
    AvgDegree,
    /// Walk inequality with `P = Δ(r−1)` and `Q = 1`.
    WalkMaxDegree,
    K2tDegree { t: usize },
    SpexK2t { t: usize },
    SpexKstC3 { s: usize, t: usize },
    ExKstC3 { s: usize, t: usize },
    /// Neighborhood clique structure at every vertex iff Berge-`C_3`-free.
    C3Structure,
}

impl BoundCheck {
    pub fn name(&self) -> String {
        match self {
            BoundCheck::Shadow => "shadow".into(),
            BoundCheck::AvgDegree => "avg_degree".into(),
            BoundCheck::WalkMaxDegree => "walk_max_degree".into(),
            BoundCheck::K2tDegree { t } => format!("k2t_degree(t={t})"),
            BoundCheck::SpexK2t { t } => format!("spex_k2t(t={t})"),
            BoundCheck::SpexKstC3 { s, t } => format!("spex_kst_c3(s={s},t={t})"),
            BoundCheck::ExKstC3 { s, t } => format!("ex_kst_c3(s={s},t={t})"),
            BoundCheck::C3Structure => "c3_structure".into(),
        }
    }
}

struct Outcome {
    hypothesis: bool,
    violation: bool,
    slack: Option<f64>,
}

fn from_report(rep: &BoundReport) -> Outcome {
    Outcome {
        hypothesis: rep.hypothesis_ok(),
        violation: rep.is_violation(),
        slack: rep.slack,
    }
}

fn evaluate(check: &BoundCheck, h: &UniformHypergraph) -> Result<Option<Outcome>> {
    Ok(Some(match check {
        BoundCheck::Shadow => {
            let rep = check_shadow_bound(h, 1e-8)?;
            let eq_ok = rep
                .side_conditions
                .iter()
                .all(|c| c.name != "equality_iff_regular" || c.holds);
            Outcome {
                violation: rep.satisfied != Some(true) || !eq_ok,
                ..from_report(&rep)
            }
        }
        BoundCheck::AvgDegree => from_report(&avg_degree_lower(h)?),
        BoundCheck::WalkMaxDegree => {
            let p = (h.max_degree() * (h.r() - 1)) as f64;
            from_report(&walk_quadratic_check(h, p, 1.0)?)
        }
        BoundCheck::K2tDegree { t } => {
            if !h.is_linear() {
                return Ok(None);
            }
            from_report(&k2t_degree_check(h, *t)?)
        }
        BoundCheck::SpexK2t { t } => from_report(&spex_k2t_check(h, *t)?),
        BoundCheck::SpexKstC3 { s, t } => from_report(&spex_kst_c3_check(h, *s, *t)?),
        BoundCheck::ExKstC3 { s, t } => from_report(&ex_kst_c3_check(h, *s, *t)?),
        BoundCheck::C3Structure => {
            if !h.is_linear() {
                return Ok(None);
            }
            let free = contains_berge(h, &PatternGraph::cycle(3)?).is_none();
            let mut structured = true;
            for u in 0..h.n() {
                structured &= c3free_neighborhood_structure(h, u)?;
            }
            Outcome {
                hypothesis: true,
                violation: structured != free,
                slack: None,
            }
        }
    }))
}

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CheckSummary {
    pub name: String,
    /// Inputs the check applied to.
    pub checked: u64,
    pub hypothesis_held: u64,
    pub violations: u64,
    /// Smallest slack among inputs whose hypothesis held.
    pub worst_slack: Option<f64>,
    pub first_violation: Option<UniformHypergraph>,
}

#[derive(Clone, Debug, Default, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub struct CorpusReport {
    pub total: u64,
    pub checks: Vec<CheckSummary>,
}

impl CorpusReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.violations == 0)
    }
}

/// Runs every check on every hypergraph of `corpus`.
pub fn verify_corpus<I>(corpus: I, checks: &[BoundCheck]) -> Result<CorpusReport>
where
    I: IntoIterator<Item = UniformHypergraph>,
{
    let mut report = CorpusReport {
        total: 0,
        checks: checks
            .iter()
            .map(|c| CheckSummary {
                name: c.name(),
                checked: 0,
                hypothesis_held: 0,
                violations: 0,
                worst_slack: None,
                first_violation: None,
            })
            .collect(),
    };
    for h in corpus {
        report.total += 1;
        for (check, sum) in checks.iter().zip(&mut report.checks) {
            let Some(out) = evaluate(check, &h)? else {
                continue;
            };
            sum.checked += 1;
            if out.hypothesis {
                sum.hypothesis_held += 1;
                if let Some(s) = out.slack {
                    sum.worst_slack = Some(sum.worst_slack.map_or(s, |w| w.min(s)));
                }
            }
            if out.violation {
                sum.violations += 1;
                if sum.first_violation.is_none() {
                    sum.first_violation = Some(h.clone());
                }
            }
        }
    }
    Ok(report)
}

impl core::fmt::Display for CheckSummary {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(
            f,
            "{}: checked {}, hypothesis held {}, violations {}",
            self.name, self.checked, self.hypothesis_held, self.violations
        )?;
        if let Some(s) = self.worst_slack {
            write!(f, ", worst slack {s:.3e}")?;
        }
        Ok(())
    }
}

impl Objective {
    pub fn as_str(&self) -> &'static str {
        match self {
            Objective::Edges => "edges",
            Objective::SpectralRadius => "rho",
        }
    }
}

impl core::str::FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edges" => Ok(Objective::Edges),
            "rho" | "spectral-radius" => Ok(Objective::SpectralRadius),
            other => Err(Error::InvalidParameter(format!("unknown objective {other}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subsets_are_lexicographic() {
        let s = r_subsets(4, 2);
        assert_eq!(s.len(), 6);
        assert_eq!(s[0], vec![0, 1]);
        assert_eq!(s[5], vec![2, 3]);
        assert!(r_subsets(2, 3).is_empty());
        assert_eq!(binomial(8, 3), 56);
    }

    #[test]
    fn counts_small_classes() {
        // graphs on 4 vertices: 11 isomorphism classes
        let mut count = 0;
        assert!(for_each_class(&SearchSpec::new(4, 2), |_| {
            count += 1;
            true
        })
        .unwrap());
        assert_eq!(count, 11);
        // 3-graphs on 4 vertices: one class per edge count
        let mut count = 0;
        for_each_class(&SearchSpec::new(4, 3), |_| {
            count += 1;
            true
        })
        .unwrap();
        assert_eq!(count, 5);
    }

    #[test]
    fn mantel_five() {
        let spec = SearchSpec {
            forbidden: vec![PatternGraph::cycle(3).unwrap()],
            ..SearchSpec::new(5, 2)
        };
        let res = enumerate_extremal(&spec).unwrap();
        assert_eq!(res.optimum, 6.0);
        assert!(res.exhaustive);
        assert_eq!(res.witnesses.len(), 1);
    }

    #[test]
    fn fano_is_the_seven_point_optimum() {
        let spec = SearchSpec {
            linear: true,
            ..SearchSpec::new(7, 3)
        };
        let res = enumerate_extremal(&spec).unwrap();
        assert_eq!(res.optimum, 7.0);
        assert_eq!(
            res.witnesses,
            vec![crate::canon::canonical_form(&UniformHypergraph::fano()).unwrap()]
        );
    }

    #[test]
    fn budget_truncates() {
        let spec = SearchSpec {
            node_budget: Some(3),
            ..SearchSpec::new(5, 2)
        };
        let res = enumerate_extremal(&spec).unwrap();
        assert!(!res.exhaustive);
        assert_eq!(res.nodes, 3);
    }

    #[test]
    fn random_linear_examples() {
        let one = random_linear(3, 3, 1, 5).unwrap();
        assert_eq!(one.edge_count(), 1);
        let h = random_linear(7, 3, 42, 7).unwrap();
        assert!(h.is_linear() && h.edge_count() <= 7);
        assert_eq!(h, random_linear(7, 3, 42, 7).unwrap());
        assert_eq!(random_linear(2, 3, 0, 4).unwrap().edge_count(), 0);
    }

    #[test]
    fn empty_corpus() {
        let rep = verify_corpus(Vec::new(), &[BoundCheck::Shadow]).unwrap();
        assert!(rep.ok());
        assert_eq!(rep.total, 0);
    }

    #[test]
    fn guards() {
        assert!(Generator::new(&SearchSpec::new(13, 2)).is_err());
        assert!(Generator::new(&SearchSpec::new(12, 6)).is_ok());
        let big = SearchSpec::new(12, 5);
        assert!(binomial(12, 5) < MAX_CANDIDATE_EDGES as u128);
        assert!(Generator::new(&big).is_ok());
    }
}
