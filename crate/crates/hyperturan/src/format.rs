//! Hypergraph and pattern file formats.
//!
//! Text: a header line `r n m` followed by `m` lines of `r` vertex ids.
//! Blank lines and `#` comments are ignored. JSON: `{"r":…,"n":…,"edges":[[…],…]}`.

use std::collections::HashMap;
use std::path::Path;

use hyperturan_core::{PatternGraph, UniformHypergraph};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{path}: {source}")]
    InFile {
        path: String,
        source: Box<FormatError>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

fn line_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Line {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn content_lines(s: &str) -> impl Iterator<Item = (usize, &str)> {
    s.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        (!l.is_empty()).then_some((i + 1, l))
    })
}

fn numbers(line: usize, s: &str) -> Result<Vec<usize>, FormatError> {
    s.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| line_err(line, format!("`{tok}` is not a nonnegative integer")))
        })
        .collect()
}

/// Validates one edge against `r`, `n` and the edges seen so far, returning
/// it sorted. `line` is where the edge came from.
fn check_edge(
    mut e: Vec<usize>,
    r: usize,
    n: usize,
    line: usize,
    seen: &mut HashMap<Vec<usize>, usize>,
) -> Result<Vec<usize>, FormatError> {
    if e.len() != r {
        return Err(line_err(line, format!("expected {r} vertices, found {}", e.len())));
    }
    if let Some(&v) = e.iter().find(|&&v| v >= n) {
        return Err(line_err(line, format!("vertex {v} out of range 0..{n}")));
    }
    e.sort_unstable();
    if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
        return Err(line_err(line, format!("vertex {} repeated in edge", w[0])));
    }
    if let Some(prev) = seen.insert(e.clone(), line) {
        return Err(line_err(line, format!("duplicate of the edge on line {prev}")));
    }
    Ok(e)
}

fn check_uniformity(r: usize, line: usize) -> Result<(), FormatError> {
    if r < 2 {
        return Err(line_err(line, format!("uniformity must be at least 2, got {r}")));
    }
    Ok(())
}

pub fn parse_text(s: &str) -> Result<UniformHypergraph, FormatError> {
    let mut lines = content_lines(s);
    let (hline, header) = lines.next().ok_or_else(|| line_err(1, "empty input"))?;
    let head = numbers(hline, header)?;
    let [r, n, m] = head[..] else {
        return Err(line_err(hline, "header must be `r n m`"));
    };
    check_uniformity(r, hline)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = HashMap::new();
    for (line, text) in lines.by_ref().take(m) {
        edges.push(check_edge(numbers(line, text)?, r, n, line, &mut seen)?);
    }
    if edges.len() < m {
        let last = s.lines().count().max(1);
        return Err(line_err(last, format!("expected {m} edges, found {}", edges.len())));
    }
    if let Some((line, _)) = lines.next() {
        return Err(line_err(line, format!("content after the {m} declared edges")));
    }
    UniformHypergraph::new(r, n, edges).map_err(|e| line_err(hline, e.to_string()))
}

/// 1-based line of the start of the `i`-th inner array of the `"edges"` array.
fn json_edge_line(s: &str, i: usize) -> Option<usize> {
    let start = s.find("\"edges\"")?;
    let mut depth = 0usize;
    let mut count = 0usize;
    for (off, ch) in s[start..].char_indices() {
        match ch {
            '[' => {
                depth += 1;
                if depth == 2 {
                    if count == i {
                        return Some(s[..start + off].matches('\n').count() + 1);
                    }
                    count += 1;
                }
            }
            ']' => {
                depth = depth.checked_sub(1)?;
                if depth == 0 {
                    return None;
                }
            }
            _ => {}
        }
    }
    None
}

pub fn parse_json(s: &str) -> Result<UniformHypergraph, FormatError> {
    #[derive(serde::Deserialize)]
    #[serde(deny_unknown_fields)]
    struct Repr {
        r: usize,
        n: usize,
        edges: Vec<Vec<usize>>,
    }
    let repr: Repr = serde_json::from_str(s)?;
    check_uniformity(repr.r, 1)?;
    let mut seen = HashMap::new();
    let mut edges = Vec::with_capacity(repr.edges.len());
    for (i, e) in repr.edges.into_iter().enumerate() {
        let line = json_edge_line(s, i).unwrap_or(1);
        edges.push(check_edge(e, repr.r, repr.n, line, &mut seen)?);
    }
    UniformHypergraph::new(repr.r, repr.n, edges).map_err(|e| line_err(1, e.to_string()))
}

/// JSON when the first non-blank character is `{`, text otherwise.
pub fn parse_auto(s: &str) -> Result<UniformHypergraph, FormatError> {
    if s.trim_start().starts_with('{') {
        parse_json(s)
    } else {
        parse_text(s)
    }
}

pub fn to_text(h: &UniformHypergraph) -> String {
    let mut out = format!("{} {} {}\n", h.r(), h.n(), h.edge_count());
    for e in h.edges() {
        let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}

pub fn to_json(h: &UniformHypergraph) -> String {
    serde_json::to_string(h).expect("hypergraph serialization cannot fail")
}

pub fn write(h: &UniformHypergraph, format: Format) -> String {
    match format {
        Format::Text => to_text(h),
        Format::Json => to_json(h) + "\n",
    }
}

/// A loaded input file together with its SHA-256 digest.
pub struct Loaded<T> {
    pub value: T,
    pub path: String,
    pub sha256: String,
}

fn read(path: &Path) -> Result<(String, String), FormatError> {
    let bytes = std::fs::read(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let digest = hex::encode(Sha256::digest(&bytes));
    let text = String::from_utf8(bytes).map_err(|e| FormatError::Io {
        path: path.display().to_string(),
        source: std::io::Error::new(std::io::ErrorKind::InvalidData, e),
    })?;
    Ok((text, digest))
}

fn in_file(path: &Path, e: FormatError) -> FormatError {
    FormatError::InFile {
        path: path.display().to_string(),
        source: Box::new(e),
    }
}

pub fn load_hypergraph(path: &Path) -> Result<Loaded<UniformHypergraph>, FormatError> {
    let (text, sha256) = read(path)?;
    let value = parse_auto(&text).map_err(|e| in_file(path, e))?;
    Ok(Loaded {
        value,
        path: path.display().to_string(),
        sha256,
    })
}

/// Pattern graph text: a header `n m` followed by `m` lines `a b`. JSON
/// `{"n":…,"edges":[[a,b],…]}` is also accepted.
pub fn parse_pattern_graph(s: &str) -> Result<PatternGraph, FormatError> {
    if s.trim_start().starts_with('{') {
        #[derive(serde::Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let repr: Repr = serde_json::from_str(s)?;
        return PatternGraph::from_edges(repr.n, &repr.edges).map_err(|e| line_err(1, e.to_string()));
    }
    let mut lines = content_lines(s);
    let (hline, header) = lines.next().ok_or_else(|| line_err(1, "empty input"))?;
    let [n, m] = numbers(hline, header)?[..] else {
        return Err(line_err(hline, "header must be `n m`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines.by_ref().take(m) {
        let [a, b] = numbers(line, text)?[..] else {
            return Err(line_err(line, "expected two vertices"));
        };
        if a >= n || b >= n {
            return Err(line_err(line, format!("vertex out of range 0..{n}")));
        }
        if a == b {
            return Err(line_err(line, "loops are not allowed"));
        }
        edges.push((a, b));
    }
    if edges.len() < m {
        return Err(line_err(s.lines().count().max(1), format!("expected {m} edges, found {}", edges.len())));
    }
    if let Some((line, _)) = lines.next() {
        return Err(line_err(line, format!("content after the {m} declared edges")));
    }
    PatternGraph::from_edges(n, &edges).map_err(|e| line_err(hline, e.to_string()))
}

pub fn load_pattern_graph(path: &Path) -> Result<Loaded<PatternGraph>, FormatError> {
    let (text, sha256) = read(path)?;
    let value = parse_pattern_graph(&text).map_err(|e| in_file(path, e))?;
    Ok(Loaded {
        value,
        path: path.display().to_string(),
        sha256,
    })
}
