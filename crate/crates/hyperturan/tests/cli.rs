use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hyperturan::report::SCHEMA;
use serde_json::Value;

const FANO: &str = "3 7 7\n0 1 2\n0 3 4\n0 5 6\n1 3 5\n1 4 6\n2 3 6\n2 4 5\n";
const STAR3: &str = "3 7 3\n0 1 2\n0 3 4\n0 5 6\n";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hyperturan"));
    c.env_remove("HYPERTURAN_THREADS");
    c
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn validated(o: &Output) -> Value {
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(&doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "schema errors: {errors:?}\n{doc:#}");
    doc
}

#[test]
fn spectral_fano() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "fano.hg", FANO);
    let o = run(&["spectral", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("rho = 3.0000000000"), "{}", stdout(&o));

    let o = run(&["spectral", "--json", "--vector", f.to_str().unwrap()]);
    let doc = validated(&o);
    assert!((doc["results"][0]["rho"].as_f64().unwrap() - 3.0).abs() < 1e-8);
    assert_eq!(doc["results"][0]["eigenvector"].as_array().unwrap().len(), 7);
    assert_eq!(doc["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn berge_check_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let star = write(dir.path(), "star3.hg", STAR3);
    let fano = write(dir.path(), "fano.hg", FANO);
    let o = run(&["berge-check", "--pattern", "c3", star.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c3: not found"));

    let o = run(&["berge-check", "--pattern", "c3,k2:3", "--witness", fano.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("c3: found") && text.contains("k2:3: not found"), "{text}");

    let o = run(&["berge-check", "--pattern", "c3", "--json", fano.to_str().unwrap()]);
    let doc = validated(&o);
    assert_eq!(doc["status"], "flagged");
    assert_eq!(doc["exit_code"], 1);

    let o = run(&["berge-check", "--pattern", "c20", fano.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn exact_head_needs_bipartite_pattern() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "star.hg", STAR3);
    let o = run(&["berge-check", "--pattern", "k1,3", "--exact-head", "0", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["berge-check", "--pattern", "c3", "--exact-head", "0", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bound_eval() {
    let o = run(&["bound", "eval", "--name", "spex_kst_c3", "--params", "n=7,r=3,s=2,t=2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().next(), Some("1.5"));
    let o = run(&["bound", "eval", "--name", "spex_kst_c3", "--params", "n=7,r=3,s=2,t=2", "--json"]);
    let doc = validated(&o);
    assert_eq!(doc["results"][0]["report"]["bound_value"], 1.5);
    let o = run(&["bound", "eval", "--name", "nope", "--params", "n=1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["bound", "eval", "--name", "spex_kst_c3", "--params", "n=7,r=3,s=2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bound_verify_strictness() {
    let dir = tempfile::tempdir().unwrap();
    let fano = write(dir.path(), "fano.hg", FANO);
    let path = fano.to_str().unwrap();
    // Fano has 7 edges but the s = t = 2 edge bound at n = 7 is 3.5: it is
    // not in the class, which only --strict notices.
    let o = run(&["bound", "verify", "--name", "ex_kst_c3", "--input", path, "--params", "s=2,t=2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["bound", "verify", "--name", "ex_kst_c3", "--input", path, "--params", "s=2,t=2", "--strict"]);
    assert_eq!(o.status.code(), Some(0));

    let o = run(&["bound", "verify", "--name", "shadow", "--input", path, "--json"]);
    assert_eq!(o.status.code(), Some(0));
    validated(&o);
    let o = run(&["bound", "verify", "--name", "bogus", "--input", path]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn shadow_command() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "star.hg", STAR3);
    let o = run(&["shadow", "--json", f.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let doc = validated(&o);
    assert_eq!(doc["results"][0]["flagged"], false);
}

#[test]
fn malformed_input_is_line_numbered() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.hg", "3 5 2\n0 1 2\n0 1 9\n");
    let o = run(&["spectral", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3") && err.contains("out of range"), "{err}");
    let o = run(&["spectral", "--json", bad.to_str().unwrap()]);
    let doc = validated(&o);
    assert_eq!(doc["status"], "error");
    let o = run(&["spectral", "--no-such-flag", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["spectral", "/nonexistent/file.hg"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extremal_reproducible_across_threads() {
    let base = ["extremal", "--n", "7", "--r", "3", "--linear", "--forbid", "c3,k2,2", "--objective", "rho", "--json"];
    let one = validated(&run(&[&base[..], &["--threads", "1"]].concat()));
    let four = validated(&run(&[&base[..], &["--threads", "4"]].concat()));
    let r1 = &one["results"][0]["result"];
    let r4 = &four["results"][0]["result"];
    assert!(r1["optimum"].as_f64().unwrap() <= 1.5 + 1e-9);
    assert_eq!(r1["optimum"], r4["optimum"]);
    assert_eq!(r1["witnesses"], r4["witnesses"]);
    assert_eq!(r1["nodes"], r4["nodes"]);
    assert_eq!(r1["exhaustive"], true);
}

#[test]
fn extremal_thread_env() {
    let o = bin()
        .env("HYPERTURAN_THREADS", "2")
        .args(["extremal", "--n", "5", "--r", "2", "--forbid", "c3", "--json"])
        .output()
        .unwrap();
    let doc = validated(&o);
    assert_eq!(doc["results"][0]["threads"], 2);
    assert_eq!(doc["results"][0]["result"]["optimum"], 6.0);
    let o = bin()
        .env("HYPERTURAN_THREADS", "2")
        .args(["extremal", "--n", "5", "--r", "2", "--threads", "3", "--json"])
        .output()
        .unwrap();
    assert_eq!(validated(&o)["results"][0]["threads"], 3);
}

#[test]
fn extremal_budget_is_partial() {
    let o = run(&["extremal", "--n", "7", "--r", "2", "--budget-nodes", "5", "--threads", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exhaustive = false"));
}

#[test]
fn gen_is_seeded_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let a = run(&["gen", "--n", "9", "--r", "3", "--seed", "5"]);
    let b = run(&["gen", "--n", "9", "--r", "3", "--seed", "5"]);
    assert_eq!(a.stdout, b.stdout);
    let h = hyperturan::parse_text(&stdout(&a)).unwrap();
    assert!(h.is_linear());

    let out = dir.path().join("g.json");
    let o = run(&["gen", "--n", "9", "--r", "3", "--seed", "5", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let j = hyperturan::parse_json(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(h, j);

    let doc = validated(&run(&["gen", "--n", "9", "--r", "3", "--seed", "5", "--json"]));
    assert_eq!(doc["results"][0]["seed"], 5);
}

#[test]
fn verify_corpus_command() {
    let o = run(&[
        "verify", "--random", "20", "--n", "10", "--r", "3", "--seed", "1", "--check", "shadow", "--check", "avg_degree",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("hypergraphs = 20"));

    let o = run(&[
        "verify", "--exhaustive", "--n", "7", "--r", "3", "--linear", "--forbid", "c3,k2,2",
        "--check", "spex_kst_c3:2,2", "--check", "ex_kst_c3:2,2", "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc = validated(&o);
    assert_eq!(doc["results"][0]["report"]["checks"][0]["violations"], 0);

    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--random", "1", "--n", "5", "--r", "3", "--check", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pattern_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let pat = write(dir.path(), "tri.pg", "3 3\n0 1\n1 2\n0 2\n");
    let fano = write(dir.path(), "fano.hg", FANO);
    let spec = format!("file:{}", pat.display());
    let o = run(&["berge-check", "--pattern", &spec, "--json", fano.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let doc = validated(&o);
    assert_eq!(doc["inputs"].as_array().unwrap().len(), 2);
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&[]).status.code(), Some(2));
}
