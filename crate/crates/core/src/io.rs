//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! p 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The `p <n> <m>` header is optional; without it `n` is one more than the
//! largest id. Ids are 0-based. Errors report 1-based line numbers.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        if toks.is_empty() || toks[0].starts_with('#') {
            continue;
        }
        let num = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| Error::Parse { line, message: format!("expected a non-negative integer, found `{t}`") })
        };
        if toks[0] == "p" {
            if header.is_some() || !edges.is_empty() {
                return Err(Error::Parse { line, message: "header must come first and only once".into() });
            }
            if toks.len() != 3 {
                return Err(Error::Parse { line, message: "header is `p <n> <m>`".into() });
            }
            header = Some((num(toks[1])?, num(toks[2])?, line));
            continue;
        }
        if toks.len() != 2 {
            return Err(Error::Parse { line, message: format!("expected `u v`, found {} fields", toks.len()) });
        }
        let (u, v) = (num(toks[0])?, num(toks[1])?);
        if let Some((n, _, _)) = header {
            if u.max(v) >= n {
                return Err(Error::Parse { line, message: format!("vertex {} out of range for n = {n}", u.max(v)) });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(Error::DuplicateEdge { line, u: u.min(v), v: u.max(v) });
        }
        edges.push((u, v));
    }
    let n = match header {
        Some((n, m, line)) => {
            if m != edges.len() {
                return Err(Error::Parse { line, message: format!("header announces {m} edges, found {}", edges.len()) });
            }
            n
        }
        None => edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0),
    };
    if n == 0 {
        return Err(Error::Parse { line: 1, message: "empty graph".into() });
    }
    Graph::from_edges(n, edges)
}

/// Header plus edges `u < v` in lexicographic order.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
