//! Plain-text graph format.
//!
//! ```text
//! c comment
//! p undirected 3 2
//! e 1 2
//! e 2 3
//! ```
//!
//! Endpoints are 1-indexed in the file and 0-indexed in memory. Directed
//! files read `e u v` as the arc `u -> v`.

use std::collections::HashSet;
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("missing `p` header")]
    MissingHeader,
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(bool, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut parts = raw.split_whitespace();
        let Some(tag) = parts.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(syntax(line, "second `p` header"));
                }
                let dir = match parts.next() {
                    Some("undirected") => false,
                    Some("directed") => true,
                    other => return Err(syntax(line, format!("unknown direction `{}`", other.unwrap_or("")))),
                };
                let n = number(parts.next(), line)?;
                let m = number(parts.next(), line)?;
                if parts.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                header = Some((dir, n, m));
            }
            "e" => {
                let Some((_, n, _)) = header else { return Err(ParseError::MissingHeader) };
                let u = number(parts.next(), line)?;
                let v = number(parts.next(), line)?;
                if parts.next().is_some() {
                    return Err(syntax(line, "trailing tokens"));
                }
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(syntax(line, format!("endpoint {x} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(syntax(line, format!("self-loop at {u}")));
                }
                let key = if header.is_some_and(|h| h.0) || u < v { (u, v) } else { (v, u) };
                if !seen.insert(key) {
                    return Err(syntax(line, format!("duplicate edge {u} {v}")));
                }
                edges.push((u - 1, v - 1));
            }
            other => return Err(syntax(line, format!("unknown line type `{other}`"))),
        }
    }
    let (directed, n, m) = header.ok_or(ParseError::MissingHeader)?;
    if edges.len() != m {
        return Err(ParseError::EdgeCount { expected: m, found: edges.len() });
    }
    let g = if directed { Graph::directed(n, &edges) } else { Graph::undirected(n, &edges) };
    Ok(g.expect("edges checked above"))
}

fn number(tok: Option<&str>, line: usize) -> Result<usize, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, "missing number"))?;
    tok.parse().map_err(|_| syntax(line, format!("`{tok}` is not a number")))
}

pub fn write_graph(g: &Graph) -> String {
    let dir = if g.is_directed() { "directed" } else { "undirected" };
    let mut out = format!("p {dir} {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// One `vertex<TAB>label` line per vertex, vertices 1-indexed.
pub fn write_labels(labels: &[String]) -> String {
    let mut out = String::new();
    for (v, l) in labels.iter().enumerate() {
        let _ = writeln!(out, "{}\t{l}", v + 1);
    }
    out
}
