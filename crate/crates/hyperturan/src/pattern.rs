//! Pattern names used on the command line: `c3`, `c<k>`, `ck:<k>`,
//! `k<s>,<t>`, `k<s>:<t>`, `kst:<s>,<t>`, `path<len>`, `edge`, `file:<path>`.

use std::path::Path;

use hyperturan_core::PatternGraph;
use thiserror::Error;

use crate::format::{load_pattern_graph, FormatError};

#[derive(Debug, Error)]
pub enum PatternError {
    #[error("unknown pattern `{0}`")]
    Unknown(String),
    #[error("pattern `{name}`: {source}")]
    Invalid {
        name: String,
        source: hyperturan_core::Error,
    },
    #[error(transparent)]
    File(#[from] FormatError),
}

/// A parsed pattern with its display label and, for files, the input digest.
#[derive(Clone, Debug)]
pub struct NamedPattern {
    pub label: String,
    pub graph: PatternGraph,
    pub file: Option<(String, String)>,
    /// `Some((s, t))` when the pattern was given as a complete bipartite graph.
    pub bipartite: Option<(usize, usize)>,
}

fn num(s: &str, whole: &str) -> Result<usize, PatternError> {
    s.parse().map_err(|_| PatternError::Unknown(whole.to_string()))
}

fn two(s: &str, whole: &str) -> Result<(usize, usize), PatternError> {
    let (a, b) = s
        .split_once([',', ':'])
        .ok_or_else(|| PatternError::Unknown(whole.to_string()))?;
    Ok((num(a, whole)?, num(b, whole)?))
}

pub fn parse_pattern(spec: &str) -> Result<NamedPattern, PatternError> {
    let s = spec.trim().to_ascii_lowercase();
    let invalid = |source| PatternError::Invalid {
        name: spec.to_string(),
        source,
    };
    if let Some(path) = spec.trim().strip_prefix("file:") {
        let loaded = load_pattern_graph(Path::new(path))?;
        return Ok(NamedPattern {
            label: spec.trim().to_string(),
            graph: loaded.value,
            file: Some((loaded.path, loaded.sha256)),
            bipartite: None,
        });
    }
    let cycle = |k: usize| -> Result<NamedPattern, PatternError> {
        Ok(NamedPattern {
            label: format!("c{k}"),
            graph: PatternGraph::cycle(k).map_err(invalid)?,
            file: None,
            bipartite: None,
        })
    };
    let biclique = |(a, b): (usize, usize)| -> Result<NamedPattern, PatternError> {
        Ok(NamedPattern {
            label: format!("k{a}:{b}"),
            graph: PatternGraph::complete_bipartite(a, b).map_err(invalid)?,
            file: None,
            bipartite: Some((a, b)),
        })
    };
    if s == "edge" {
        return Ok(NamedPattern {
            label: s,
            graph: PatternGraph::single_edge(),
            file: None,
            bipartite: None,
        });
    }
    if let Some(rest) = s.strip_prefix("path") {
        let len = num(rest, spec)?;
        return Ok(NamedPattern {
            label: format!("path{len}"),
            graph: PatternGraph::path(len),
            file: None,
            bipartite: None,
        });
    }
    if let Some(rest) = s.strip_prefix("ck:") {
        return cycle(num(rest, spec)?);
    }
    if let Some(rest) = s.strip_prefix("kst:") {
        return biclique(two(rest, spec)?);
    }
    if let Some(rest) = s.strip_prefix('c') {
        return cycle(num(rest, spec)?);
    }
    if let Some(rest) = s.strip_prefix('k') {
        return biclique(two(rest, spec)?);
    }
    Err(PatternError::Unknown(spec.to_string()))
}

/// Splits a comma-separated pattern list. A bare number after `k<s>` or
/// `kst:<s>` belongs to that pattern, so `c3,k2,2` is `c3` and `k2,2`.
pub fn split_pattern_list(list: &str) -> Vec<String> {
    let mut out: Vec<String> = Vec::new();
    for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let joins = tok.chars().all(|c| c.is_ascii_digit())
            && out.last().is_some_and(|prev| {
                let p = prev.to_ascii_lowercase();
                let open = p.strip_prefix("kst:").or_else(|| p.strip_prefix('k'));
                open.is_some_and(|r| !r.is_empty() && r.chars().all(|c| c.is_ascii_digit()))
            });
        if joins {
            let prev = out.last_mut().expect("checked above");
            prev.push(',');
            prev.push_str(tok);
        } else {
            out.push(tok.to_string());
        }
    }
    out
}

pub fn parse_pattern_list(list: &str) -> Result<Vec<NamedPattern>, PatternError> {
    split_pattern_list(list).iter().map(|s| parse_pattern(s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        let c3 = PatternGraph::cycle(3).unwrap();
        assert_eq!(parse_pattern("c3").unwrap().graph, c3);
        assert_eq!(parse_pattern("ck:3").unwrap().graph, c3);
        assert_eq!(parse_pattern("C3").unwrap().graph, c3);
        let k23 = PatternGraph::complete_bipartite(2, 3).unwrap();
        for s in ["k2,3", "k2:3", "kst:2,3"] {
            let p = parse_pattern(s).unwrap();
            assert_eq!(p.graph, k23);
            assert_eq!(p.bipartite, Some((2, 3)));
        }
        assert!(parse_pattern("c2").is_err());
        assert!(parse_pattern("q7").is_err());
        assert!(parse_pattern("k2").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(split_pattern_list("c3,k2,2"), ["c3", "k2,2"]);
        assert_eq!(split_pattern_list("c3, k2:2,c4"), ["c3", "k2:2", "c4"]);
        assert_eq!(split_pattern_list("kst:2,3,c5"), ["kst:2,3", "c5"]);
        assert_eq!(parse_pattern_list("c3,k2,2").unwrap().len(), 2);
    }
}
