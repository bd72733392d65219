// graph6, short form only: one size byte n+63 followed by the upper triangle of the
// adjacency matrix in column order (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte, most significant first, each byte offset by 63.
// Reference: https://users.cecs.anu.edu.au/~bdm/data/formats.txt

use super::Graph;
use crate::error::{Error, Result};

/// Largest vertex count representable with the single-byte size header.
pub const GRAPH6_MAX_VERTICES: usize = 62;

const BIAS: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing newline is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let Some(&header) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if !(BIAS..=126).contains(&header) {
        return Err(err(0, format!("size byte {header} outside 63..=126")));
    }
    if header == 126 {
        return Err(err(0, "long-form size header is not supported (n > 62)"));
    }
    let n = usize::from(header - BIAS);
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }
    let expected = 1 + body_len(n);
    if bytes.len() < expected {
        return Err(err(
            bytes.len(),
            format!("truncated: expected {expected} bytes for n = {n}"),
        ));
    }
    if bytes.len() > expected {
        return Err(err(expected, "trailing bytes after adjacency data"));
    }
    let mut sextets = Vec::with_capacity(expected - 1);
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(BIAS..=BIAS + 63).contains(&b) {
            return Err(err(i, format!("byte {b} outside 63..=126")));
        }
        sextets.push(b - BIAS);
    }

    let bit = |k: usize| (sextets[k / 6] >> (5 - k % 6)) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    let total_bits = sextets.len() * 6;
    if (k..total_bits).any(bit) {
        return Err(err(
            1 + k / 6,
            "nonzero padding bits after the last adjacency bit",
        ));
    }
    Graph::new(n, edges)
}

/// Encodes a graph with at most 62 vertices.
pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_VERTICES {
        return Err(Error::InvalidParameter(format!(
            "graph6 short form supports at most {GRAPH6_MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + BIAS);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
