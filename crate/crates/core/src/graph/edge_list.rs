use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn err(line: usize, reason: impl Into<String>) -> Error {
    Error::EdgeList {
        line,
        reason: reason.into(),
    }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut parts = line.split_whitespace();
    let mut next = || {
        parts
            .next()
            .ok_or_else(|| err(line_no, format!("expected two integers ({what})")))
            .and_then(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| err(line_no, format!("not a non-negative integer: {tok:?}")))
            })
    };
    let pair = (next()?, next()?);
    if parts.next().is_some() {
        return Err(err(line_no, format!("unexpected extra tokens ({what})")));
    }
    Ok(pair)
}

/// Parses `n m` followed by `m` lines `u v` (0-based). Blank lines are ignored;
/// line numbers in errors are 1-based.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| err(1, "missing \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header, "header \"n m\"")?;
    if n == 0 {
        return Err(err(header_line, "graph has no vertices"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut last_line = header_line;
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(err(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line_no, line, "edge \"u v\"")?;
        if u >= n || v >= n {
            return Err(err(line_no, format!("vertex out of range 0..{n}")));
        }
        if u == v {
            return Err(err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
        last_line = line_no;
    }
    if edges.len() != m {
        return Err(err(
            last_line,
            format!("declared {m} edges but found {}", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
