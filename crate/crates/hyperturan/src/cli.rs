//! Command-line front end.
//!
//! Exit status: 0 when everything holds (or nothing was found), 1 when a bound
//! fails or a pattern is found, 2 on input errors.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};
use hyperturan_core::berge::{contains_berge, contains_exact_berge_kst, BergeEmbedding, DEFAULT_MAX_PATTERN_EDGES};
use hyperturan_core::bounds::{self, BoundReport, Verdict};
use hyperturan_core::extremal::{for_each_class, BoundCheck, ExactForbidden, Objective, SearchSpec};
use hyperturan_core::shadow::check_shadow_bound;
use hyperturan_core::{random_linear, spectral_radius_with, verify_corpus, HmBipartition, SpectralOptions, UniformHypergraph};
use serde_json::{json, Value};
use thiserror::Error;

use crate::format::{self, load_hypergraph, Format, FormatError, Loaded};
use crate::pattern::{parse_pattern_list, PatternError};
use crate::report::{InputDigest, RunReport, Status};
use crate::search::parallel_extremal;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Pattern(#[from] PatternError),
    #[error(transparent)]
    Core(#[from] hyperturan_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            // a numerical failure is not an input error
            CliError::Core(hyperturan_core::Error::NotConverged { .. }) => 1,
            _ => 2,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "hyperturan", version, about = "Spectral and Turán-type computations for uniform hypergraphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Spectral radius of the adjacency tensor.
    Spectral(SpectralArgs),
    /// Compare ρ(H) with ρ(∂H)/(r−1) for the 2-shadow ∂H.
    Shadow(ShadowArgs),
    /// Search for Berge copies of graph patterns (exit 1 when found).
    BergeCheck(BergeArgs),
    /// Evaluate a closed-form bound or check one against a hypergraph.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Run bound checks over a corpus of files, random or enumerated hypergraphs.
    Verify(VerifyArgs),
    /// Exhaustive extremal search.
    Extremal(ExtremalArgs),
    /// Random linear hypergraph.
    Gen(GenArgs),
}

#[derive(Args, Debug)]
pub struct SpectralArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long, default_value_t = 100_000)]
    pub max_iter: usize,
    /// Print the eigenvector too.
    #[arg(long)]
    pub vector: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ShadowArgs {
    pub input: PathBuf,
    #[arg(long, default_value_t = 1e-8)]
    pub tol: f64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct BergeArgs {
    pub input: PathBuf,
    /// Pattern list, e.g. `c3,k2:2` (repeatable).
    #[arg(long, required = true)]
    pub pattern: Vec<String>,
    /// Head vertices for exact Berge-K_{s,t} containment (`0,1,…`).
    #[arg(long)]
    pub exact_head: Option<String>,
    /// Print the embedding when found.
    #[arg(long)]
    pub witness: bool,
    /// Refuse patterns with more edges than this.
    #[arg(long, default_value_t = DEFAULT_MAX_PATTERN_EDGES)]
    pub max_pattern_edges: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand, Debug)]
pub enum BoundCommand {
    /// Evaluate a named formula, e.g. `--name spex_kst_c3 --params n=7,r=3,s=2,t=2`.
    Eval {
        #[arg(long)]
        name: String,
        #[arg(long, default_value = "")]
        params: String,
        #[arg(long)]
        json: bool,
    },
    /// Check a bound on a hypergraph file.
    Verify {
        #[arg(long)]
        name: String,
        #[arg(long)]
        input: PathBuf,
        /// Extra parameters such as `t=3` or `p=2,q=1`.
        #[arg(long, default_value = "")]
        params: String,
        /// Head vertices for `hm_edge`.
        #[arg(long)]
        head: Option<String>,
        /// Also verify linearity and Berge-freeness instead of assuming them.
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Hypergraph files to check.
    pub inputs: Vec<PathBuf>,
    /// Check to run (repeatable): shadow, avg_degree, walk_max_degree,
    /// c3_structure, k2t_degree:T, spex_k2t:T, spex_kst_c3:S,T, ex_kst_c3:S,T.
    #[arg(long = "check")]
    pub checks: Vec<String>,
    /// Number of random linear hypergraphs to add.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
    /// Add every isomorphism class allowed by --linear/--forbid.
    #[arg(long)]
    pub exhaustive: bool,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub max_edges: Option<usize>,
    #[arg(long)]
    pub linear: bool,
    #[arg(long)]
    pub forbid: Option<String>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub linear: bool,
    /// Forbidden Berge patterns, e.g. `c3,k2:2`.
    #[arg(long)]
    pub forbid: Option<String>,
    /// Head vertices of a fixed head/mass split.
    #[arg(long, requires = "exact")]
    pub exact_head: Option<String>,
    /// `s,t` of the exact Berge-K_{s,t} to forbid (needs --exact-head).
    #[arg(long, requires = "exact_head")]
    pub exact: Option<String>,
    #[arg(long, default_value = "edges")]
    pub objective: String,
    #[arg(long)]
    pub budget_nodes: Option<u64>,
    /// Wall-clock budget in milliseconds.
    #[arg(long)]
    pub budget_ms: Option<u64>,
    #[arg(long)]
    pub max_edges: Option<usize>,
    /// Check patterns only where the objective is evaluated.
    #[arg(long)]
    pub no_prune: bool,
    #[arg(long, default_value_t = 16)]
    pub witness_limit: usize,
    #[arg(long, env = "HYPERTURAN_THREADS")]
    pub threads: Option<usize>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub seed: u64,
    /// Defaults to the pair-count ceiling n(n−1)/(r(r−1)).
    #[arg(long)]
    pub max_edges: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Write the hypergraph here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

/// What a command produced before rendering.
struct Outcome {
    flagged: bool,
    text: String,
    results: Vec<Value>,
    inputs: Vec<InputDigest>,
}

impl Outcome {
    fn new() -> Self {
        Self {
            flagged: false,
            text: String::new(),
            results: Vec::new(),
            inputs: Vec::new(),
        }
    }

    fn input<T>(&mut self, l: &Loaded<T>) {
        self.inputs.push(InputDigest {
            path: l.path.clone(),
            sha256: l.sha256.clone(),
        });
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn parse_ids(s: &str) -> Result<Vec<usize>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("`{t}` is not a vertex id"))))
        .collect()
}

fn parse_params(s: &str) -> Result<Vec<(String, f64)>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|kv| {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("parameter `{kv}` is not key=value")))?;
            let v: f64 = v
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("parameter `{kv}` has no numeric value")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn param(params: &[(String, f64)], key: &str) -> Result<f64, CliError> {
    params
        .iter()
        .find(|(k, _)| k == key)
        .map(|(_, v)| *v)
        .ok_or_else(|| CliError::Usage(format!("missing parameter {key}")))
}

fn int_param(params: &[(String, f64)], key: &str) -> Result<usize, CliError> {
    let v = param(params, key)?;
    if v < 0.0 || v.fract() != 0.0 {
        return Err(CliError::Usage(format!("{key} must be a nonnegative integer")));
    }
    Ok(v as usize)
}

fn describe_report(rep: &BoundReport, out: &mut String) {
    let _ = writeln!(out, "{} bound = {}", rep.name, rep.bound_value);
    if let Some(m) = rep.measured {
        let _ = writeln!(out, "measured = {m}");
    }
    let _ = writeln!(out, "hypothesis = {:?}", rep.hypothesis);
    for c in &rep.side_conditions {
        let _ = writeln!(out, "  {} = {}", c.name, c.holds);
    }
    if let Some(s) = rep.satisfied {
        let _ = writeln!(out, "satisfied = {s}");
    }
    if let Some(s) = rep.slack {
        let _ = writeln!(out, "slack = {s:.6e}");
    }
}

fn spectral(a: &SpectralArgs) -> Result<Outcome, CliError> {
    let mut o = Outcome::new();
    let h = load_hypergraph(&a.input)?;
    o.input(&h);
    let opts = SpectralOptions {
        tol: a.tol,
        max_iter: a.max_iter,
    };
    let res = spectral_radius_with(&h.value, &opts)?;
    let mut v = json!({
        "kind": "spectral",
        "input": h.path,
        "rho": res.rho,
        "lower": res.lower,
        "upper": res.upper,
        "iterations": res.iterations,
        "residual": res.residual,
        "converged": res.converged,
    });
    if a.vector {
        v["eigenvector"] = to_value(&res.eigenvector);
    }
    o.results.push(v);
    let _ = writeln!(o.text, "rho = {:.12}", res.rho);
    let _ = writeln!(o.text, "bracket = [{:.12}, {:.12}]", res.lower, res.upper);
    let _ = writeln!(o.text, "iterations = {}", res.iterations);
    let _ = writeln!(o.text, "converged = {}", res.converged);
    if a.vector {
        let words: Vec<String> = res.eigenvector.iter().map(|x| format!("{x:.12}")).collect();
        let _ = writeln!(o.text, "eigenvector = {}", words.join(" "));
    }
    o.flagged = !res.converged;
    Ok(o)
}

fn shadow(a: &ShadowArgs) -> Result<Outcome, CliError> {
    let mut o = Outcome::new();
    let h = load_hypergraph(&a.input)?;
    o.input(&h);
    let rep = check_shadow_bound(&h.value, a.tol)?;
    let eq_ok = rep
        .side_conditions
        .iter()
        .all(|c| c.name != "equality_iff_regular" || c.holds);
    o.flagged = rep.satisfied != Some(true) || !eq_ok;
    describe_report(&rep, &mut o.text);
    o.results.push(json!({"kind": "shadow", "input": h.path, "report": rep, "flagged": o.flagged}));
    Ok(o)
}

fn show_embedding(emb: &BergeEmbedding, h: &UniformHypergraph, out: &mut String) {
    let map: Vec<String> = emb
        .vertex_map
        .iter()
        .enumerate()
        .map(|(x, v)| format!("{x}->{v}"))
        .collect();
    let _ = writeln!(out, "  vertices: {}", map.join(" "));
    let edges: Vec<String> = emb
        .edge_map
        .iter()
        .map(|&i| format!("{:?}", h.edge(i)))
        .collect();
    let _ = writeln!(out, "  edges: {}", edges.join(" "));
}

fn berge_check(a: &BergeArgs) -> Result<Outcome, CliError> {
    let mut o = Outcome::new();
    let h = load_hypergraph(&a.input)?;
    o.input(&h);
    let mut patterns = Vec::new();
    for list in &a.pattern {
        patterns.extend(parse_pattern_list(list)?);
    }
    let partition = match &a.exact_head {
        Some(ids) => Some(HmBipartition::new(h.value.n(), &parse_ids(ids)?)?),
        None => None,
    };
    for p in &patterns {
        if let Some((path, sha256)) = &p.file {
            o.inputs.push(InputDigest {
                path: path.clone(),
                sha256: sha256.clone(),
            });
        }
        if p.graph.edge_count() > a.max_pattern_edges {
            return Err(CliError::Usage(format!(
                "pattern {} has {} edges; the limit is {} (raise --max-pattern-edges)",
                p.label,
                p.graph.edge_count(),
                a.max_pattern_edges
            )));
        }
        let emb = match &partition {
            Some(part) => {
                let (s, t) = p.bipartite.ok_or_else(|| {
                    CliError::Usage(format!("--exact-head needs a K_(s,t) pattern, got {}", p.label))
                })?;
                contains_exact_berge_kst(&h.value, part, s, t)?
            }
            None => contains_berge(&h.value, &p.graph),
        };
        let found = emb.is_some();
        o.flagged |= found;
        let _ = writeln!(o.text, "{}: {}", p.label, if found { "found" } else { "not found" });
        if let (Some(e), true) = (&emb, a.witness) {
            show_embedding(e, &h.value, &mut o.text);
        }
        let mut v = json!({
            "kind": "berge",
            "input": h.path,
            "pattern": p.label,
            "exact": partition.is_some(),
            "found": found,
        });
        if let (Some(e), true) = (&emb, a.witness) {
            v["witness"] = to_value(e);
        }
        o.results.push(v);
    }
    Ok(o)
}

/// Names accepted by `bound verify`.
const VERIFY_NAMES: &[&str] = &[
    "shadow",
    "avg_degree",
    "walk",
    "degree",
    "k2t_degree",
    "spex_k2t",
    "spex_kst_c3",
    "ex_kst_c3",
    "hm_edge",
];

fn bound_verify(
    name: &str,
    input: &PathBuf,
    params: &str,
    head: Option<&str>,
    strict: bool,
) -> Result<Outcome, CliError> {
    let mut o = Outcome::new();
    let h = load_hypergraph(input)?;
    o.input(&h);
    let g = &h.value;
    let ps = parse_params(params)?;
    // Hypothesis verdict when linearity and Berge-freeness are taken on trust.
    let mut assumed = Verdict::Holds;
    let rep = match name {
        "shadow" => check_shadow_bound(g, ps.iter().find(|(k, _)| k == "tol").map_or(1e-8, |p| p.1))?,
        "avg_degree" => bounds::avg_degree_lower(g)?,
        "walk" => {
            let rep = bounds::walk_quadratic_check(g, param(&ps, "p")?, param(&ps, "q")?)?;
            assumed = rep.hypothesis;
            rep
        }
        "degree" => {
            let rep = bounds::degree_quadratic_check(g, param(&ps, "p")?, param(&ps, "q")?)?;
            assumed = rep.hypothesis;
            rep
        }
        "k2t_degree" => bounds::k2t_degree_check(g, int_param(&ps, "t")?)?,
        "spex_k2t" => {
            let t = int_param(&ps, "t")?;
            assumed = bounds::spex_k2t_bound(g.n(), g.r(), t)?.hypothesis;
            bounds::spex_k2t_check(g, t)?
        }
        "spex_kst_c3" => bounds::spex_kst_c3_check(g, int_param(&ps, "s")?, int_param(&ps, "t")?)?,
        "ex_kst_c3" => bounds::ex_kst_c3_check(g, int_param(&ps, "s")?, int_param(&ps, "t")?)?,
        "hm_edge" => {
            let head = head.ok_or_else(|| CliError::Usage("hm_edge needs --head".into()))?;
            let p = HmBipartition::new(g.n(), &parse_ids(head)?)?;
            bounds::hm_edge_check(g, &p, int_param(&ps, "s")?, int_param(&ps, "t")?, int_param(&ps, "k")?)?
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown bound {other}; expected one of {}",
                VERIFY_NAMES.join(", ")
            )))
        }
    };
    let effective = if strict { rep.hypothesis } else { assumed };
    o.flagged = effective == Verdict::Holds && rep.satisfied == Some(false);
    describe_report(&rep, &mut o.text);
    if !strict && assumed != rep.hypothesis {
        let _ = writeln!(o.text, "note: structural hypotheses assumed (use --strict to enforce)");
    }
    o.results.push(json!({
        "kind": "bound",
        "input": h.path,
        "strict": strict,
        "report": rep,
        "flagged": o.flagged,
    }));
    Ok(o)
}

fn bound(cmd: &BoundCommand) -> Result<Outcome, CliError> {
    match cmd {
        BoundCommand::Eval { name, params, .. } => {
            let mut o = Outcome::new();
            let rep = bounds::eval_named(name, &parse_params(params)?)?;
            let _ = writeln!(o.text, "{}", rep.bound_value);
            if rep.hypothesis != Verdict::Holds {
                let _ = writeln!(o.text, "hypothesis = {:?}", rep.hypothesis);
            }
            for c in &rep.side_conditions {
                let _ = writeln!(o.text, "{} = {}", c.name, c.holds);
            }
            o.results.push(json!({"kind": "bound", "report": rep, "flagged": false}));
            Ok(o)
        }
        BoundCommand::Verify {
            name,
            input,
            params,
            head,
            strict,
            ..
        } => bound_verify(name, input, params, head.as_deref(), *strict),
    }
}

/// Parses `name[:a,b]` into a corpus check.
pub fn parse_check(s: &str) -> Result<BoundCheck, CliError> {
    let (name, args) = s.split_once(':').unwrap_or((s, ""));
    let nums: Vec<usize> = args
        .split(',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("bad argument in check `{s}`")))
        })
        .collect::<Result<_, _>>()?;
    let arity = |k: usize| -> Result<(), CliError> {
        if nums.len() == k {
            Ok(())
        } else {
            Err(CliError::Usage(format!("check `{name}` takes {k} argument(s)")))
        }
    };
    Ok(match name {
        "shadow" => BoundCheck::Shadow,
        "avg_degree" => BoundCheck::AvgDegree,
        "walk_max_degree" => BoundCheck::WalkMaxDegree,
        "c3_structure" => BoundCheck::C3Structure,
        "k2t_degree" => {
            arity(1)?;
            BoundCheck::K2tDegree { t: nums[0] }
        }
        "spex_k2t" => {
            arity(1)?;
            BoundCheck::SpexK2t { t: nums[0] }
        }
        "spex_kst_c3" => {
            arity(2)?;
            BoundCheck::SpexKstC3 { s: nums[0], t: nums[1] }
        }
        "ex_kst_c3" => {
            arity(2)?;
            BoundCheck::ExKstC3 { s: nums[0], t: nums[1] }
        }
        other => return Err(CliError::Usage(format!("unknown check `{other}`"))),
    })
}

fn fisher_ceiling(n: usize, r: usize) -> usize {
    (n * n.saturating_sub(1)) / (r * (r - 1)).max(1)
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{flag} is required here")))
}

fn verify(a: &VerifyArgs) -> Result<Outcome, CliError> {
    let mut o = Outcome::new();
    let checks = if a.checks.is_empty() {
        vec![BoundCheck::Shadow, BoundCheck::AvgDegree, BoundCheck::WalkMaxDegree]
    } else {
        a.checks.iter().map(|c| parse_check(c)).collect::<Result<_, _>>()?
    };
    let mut corpus = Vec::new();
    let mut sources = Vec::new();
    for p in &a.inputs {
        let h = load_hypergraph(p)?;
        o.input(&h);
        corpus.push(h.value);
    }
    if !a.inputs.is_empty() {
        sources.push(json!({"files": a.inputs.len()}));
    }
    if a.random > 0 {
        let (n, r) = (need(a.n, "--n")?, need(a.r, "--r")?);
        if r < 2 {
            return Err(hyperturan_core::Error::InvalidUniformity(r).into());
        }
        let max_edges = a.max_edges.unwrap_or_else(|| fisher_ceiling(n, r));
        for i in 0..a.random as u64 {
            corpus.push(random_linear(n, r, a.seed.wrapping_add(i), max_edges)?);
        }
        sources.push(json!({"random": a.random, "n": n, "r": r, "seed": a.seed, "max_edges": max_edges}));
    }
    if a.exhaustive {
        let (n, r) = (need(a.n, "--n")?, need(a.r, "--r")?);
        let forbidden = match &a.forbid {
            Some(list) => parse_pattern_list(list)?.into_iter().map(|p| p.graph).collect(),
            None => Vec::new(),
        };
        let spec = SearchSpec {
            linear: a.linear,
            forbidden,
            max_edges: a.max_edges,
            ..SearchSpec::new(n, r)
        };
        let before = corpus.len();
        for_each_class(&spec, |h| {
            corpus.push(h.clone());
            true
        })?;
        sources.push(json!({
            "exhaustive": corpus.len() - before,
            "n": n,
            "r": r,
            "linear": a.linear,
            "forbid": a.forbid,
        }));
    }
    if corpus.is_empty() && a.inputs.is_empty() && a.random == 0 && !a.exhaustive {
        return Err(CliError::Usage("nothing to verify: give files, --random or --exhaustive".into()));
    }
    let rep = verify_corpus(corpus, &checks)?;
    let _ = writeln!(o.text, "hypergraphs = {}", rep.total);
    for c in &rep.checks {
        let _ = writeln!(o.text, "{c}");
    }
    o.flagged = !rep.ok();
    o.results.push(json!({"kind": "corpus", "source": sources, "report": rep}));
    Ok(o)
}

fn default_threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn edge_list(h: &UniformHypergraph) -> String {
    h.edges()
        .map(|e| {
            let vs: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", vs.join(" "))
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn extremal(a: &ExtremalArgs) -> Result<Outcome, CliError> {
    let mut o = Outcome::new();
    let mut spec = SearchSpec::new(a.n, a.r);
    spec.linear = a.linear;
    spec.objective = a.objective.parse::<Objective>()?;
    spec.node_budget = a.budget_nodes;
    spec.max_edges = a.max_edges;
    spec.prune = !a.no_prune;
    spec.witness_limit = a.witness_limit;
    if let Some(list) = &a.forbid {
        for p in parse_pattern_list(list)? {
            if let Some((path, sha256)) = p.file {
                o.inputs.push(InputDigest { path, sha256 });
            }
            spec.forbidden.push(p.graph);
        }
    }
    if let (Some(head), Some(st)) = (&a.exact_head, &a.exact) {
        let st = parse_ids(st)?;
        let [s, t] = st[..] else {
            return Err(CliError::Usage("--exact takes `s,t`".into()));
        };
        spec.exact_forbidden = Some(ExactForbidden {
            head: parse_ids(head)?,
            s,
            t,
        });
    }
    let threads = a.threads.unwrap_or_else(default_threads);
    if threads == 0 {
        return Err(CliError::Usage("--threads must be positive".into()));
    }
    let res = parallel_extremal(&spec, threads, a.budget_ms.map(Duration::from_millis))?;
    let _ = writeln!(o.text, "optimum = {}", res.optimum);
    let _ = writeln!(
        o.text,
        "witnesses = {} (showing {})",
        res.witness_count,
        res.witnesses.len()
    );
    for w in &res.witnesses {
        let _ = writeln!(o.text, "  {}", edge_list(w));
    }
    let _ = writeln!(o.text, "nodes = {}", res.nodes);
    let _ = writeln!(o.text, "exhaustive = {}", res.exhaustive);
    o.results.push(json!({
        "kind": "extremal",
        "spec": spec,
        "threads": threads,
        "result": res,
    }));
    Ok(o)
}

fn gen(a: &GenArgs) -> Result<Outcome, CliError> {
    let mut o = Outcome::new();
    if a.r < 2 {
        return Err(hyperturan_core::Error::InvalidUniformity(a.r).into());
    }
    let max_edges = a.max_edges.unwrap_or_else(|| fisher_ceiling(a.n, a.r));
    let h = random_linear(a.n, a.r, a.seed, max_edges)?;
    let body = format::write(&h, a.format);
    match &a.out {
        Some(path) => {
            std::fs::write(path, &body).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let _ = writeln!(o.text, "wrote {} edges to {}", h.edge_count(), path.display());
        }
        None => o.text.push_str(&body),
    }
    o.results.push(json!({
        "kind": "generated",
        "seed": a.seed,
        "max_edges": max_edges,
        "hypergraph": h,
    }));
    Ok(o)
}

fn wants_json(c: &Command) -> bool {
    match c {
        Command::Spectral(a) => a.json,
        Command::Shadow(a) => a.json,
        Command::BergeCheck(a) => a.json,
        Command::Bound(BoundCommand::Eval { json, .. }) => *json,
        Command::Bound(BoundCommand::Verify { json, .. }) => *json,
        Command::Verify(a) => a.json,
        Command::Extremal(a) => a.json,
        Command::Gen(a) => a.json,
    }
}

fn dispatch(c: &Command) -> Result<Outcome, CliError> {
    match c {
        Command::Spectral(a) => spectral(a),
        Command::Shadow(a) => shadow(a),
        Command::BergeCheck(a) => berge_check(a),
        Command::Bound(b) => bound(b),
        Command::Verify(a) => verify(a),
        Command::Extremal(a) => extremal(a),
        Command::Gen(a) => gen(a),
    }
}

/// Parses `args` (including the program name), runs the command, writes its
/// output and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args: Vec<std::ffi::OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    let start = Instant::now();
    let mut report = RunReport::new(
        args.iter()
            .skip(1)
            .map(|a| a.to_string_lossy().into_owned())
            .collect(),
    );
    let result = dispatch(&cli.command);
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    let json = wants_json(&cli.command);
    let code = match result {
        Ok(o) => {
            let code = i32::from(o.flagged);
            report.status = if o.flagged { Status::Flagged } else { Status::Ok };
            report.exit_code = code;
            report.inputs = o.inputs;
            report.results = o.results;
            if !json {
                let _ = write!(out, "{}", o.text);
            }
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            report.status = Status::Error;
            report.exit_code = e.exit_code();
            report.error = Some(e.to_string());
            e.exit_code()
        }
    };
    if json {
        let _ = writeln!(out, "{}", report.to_json());
    }
    code
}
