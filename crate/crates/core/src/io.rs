//! Text encodings for graphs.
//!
//! `EdgeList` is a header line `n m` followed by `m` lines `u v` with 0-based
//! endpoints. Serialization writes edges with `u < v` in lexicographic order and
//! no trailing newline. `Graph6` is the standard printable graph6 encoding; the
//! optional `>>graph6<<` header is accepted on input but never written.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    EdgeList,
    Graph6,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge-list" | "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::InvalidParameter(format!("unknown graph format '{other}'"))),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edge-list",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn serialize_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Graph6 => to_graph6(g),
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = |name: &str| -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("missing {name} in {what}")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("'{tok}' is not a nonnegative integer")))
    };
    let a = next("first field")?;
    let b = next("second field")?;
    if fields.next().is_some() {
        return Err(parse_err(line_no, format!("trailing fields in {what}")));
    }
    Ok((a, b))
}

fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (header_line, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let (n, m) = parse_pair(header_line, header, "header 'n m'")?;

    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::with_capacity(m);
    for (line_no, line) in lines {
        if edges.len() == m {
            return Err(parse_err(line_no, format!("more than the declared {m} edges")));
        }
        let (u, v) = parse_pair(line_no, line, "edge 'u v'")?;
        if u >= n || v >= n {
            return Err(parse_err(line_no, format!("vertex {} out of range for n = {n}", u.max(v))));
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count().max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push('\n');
        out.push_str(&format!("{u} {v}"));
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn parse_graph6(text: &str) -> Result<Graph> {
    let body = text.trim();
    let body = body.strip_prefix(GRAPH6_HEADER).unwrap_or(body).as_bytes();
    if let Some(pos) = body.iter().position(|b| !(63..=126).contains(b)) {
        return Err(parse_err(1, format!("byte {} at offset {pos} outside graph6 range", body[pos])));
    }
    let (n, rest) = decode_order(body)?;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    if rest.len() != needed {
        return Err(parse_err(
            1,
            format!("graph6 body for n = {n} needs {needed} bytes, found {}", rest.len()),
        ));
    }
    let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    Graph::from_edges(n, edges)
}

fn decode_order(body: &[u8]) -> Result<(usize, &[u8])> {
    let six = |bytes: &[u8]| bytes.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    match body {
        [] => Err(parse_err(1, "empty graph6 string")),
        [126, 126, rest @ ..] if rest.len() >= 6 => Ok((six(&rest[..6]), &rest[6..])),
        [126, 126, ..] => Err(parse_err(1, "truncated graph6 order")),
        [126, rest @ ..] if rest.len() >= 3 => Ok((six(&rest[..3]), &rest[3..])),
        [126, ..] => Err(parse_err(1, "truncated graph6 order")),
        [b, rest @ ..] => Ok(((b - 63) as usize, rest)),
    }
}

fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    let push_six = |out: &mut Vec<u8>, value: usize, groups: usize| {
        for k in (0..groups).rev() {
            out.push(((value >> (6 * k)) & 63) as u8 + 63);
        }
    };
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        push_six(&mut out, n, 3);
    } else {
        out.extend([126, 126]);
        push_six(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}
