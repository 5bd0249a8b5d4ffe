//! Edge-list and graph6 readers and writers.
//!
//! Edge-list: first line `n m`, then `m` lines `u v` (0-indexed, LF).
//! graph6: the standard printable encoding; orders up to 258047 are accepted.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl GraphFormat {
    /// Guess from a file extension: `.g6`/`.graph6` is graph6, anything else edge-list.
    pub fn from_path(path: &Path) -> GraphFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6") | Some("graph6") => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "edgelist" | "edge-list" | "el" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::Input(format!("unknown graph format '{other}'"))),
        }
    }
}

fn format_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Format(msg.into()))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = match lines.next() {
        Some(h) => h,
        None => return format_err("empty edge-list input"),
    };
    let (n, m) = parse_pair(header).ok_or_else(|| Error::Format(format!("malformed header '{header}'")))?;
    let mut edges = Vec::with_capacity(m);
    for (i, line) in lines.enumerate() {
        let e = parse_pair(line).ok_or_else(|| Error::Format(format!("malformed edge line {}: '{line}'", i + 2)))?;
        edges.push(e);
    }
    if edges.len() != m {
        return format_err(format!("header declares {m} edges, found {}", edges.len()));
    }
    Graph::from_edges(n, &edges).map_err(|e| match e {
        Error::Input(msg) => Error::Format(msg),
        other => other,
    })
}

fn parse_pair(line: &str) -> Option<(usize, usize)> {
    let mut it = line.split_whitespace();
    let a = it.next()?.parse().ok()?;
    let b = it.next()?.parse().ok()?;
    if it.next().is_some() {
        return None;
    }
    Some((a, b))
}

pub fn to_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.order(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return format_err("empty graph6 input");
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return format_err(format!("byte {b} outside the graph6 range"));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 || bytes[1] == 126 {
            return format_err("unsupported graph6 order prefix");
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    };
    if n == 0 {
        return format_err("graph6 order must be at least 1");
    }
    let nbits = n * (n - 1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return format_err(format!("graph6 body has {} bytes, expected {}", body.len(), nbits.div_ceil(6)));
    }
    let bit = |i: usize| (body[i / 6] - 63) >> (5 - i % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(idx) {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        assert!(n <= 258_047, "graph6 writer supports at most 258047 vertices");
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text),
    }
}

pub fn format_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::EdgeList => to_edge_list(g),
        GraphFormat::Graph6 => to_graph6(g) + "\n",
    }
}

pub fn read_graph(path: impl AsRef<Path>, format: GraphFormat) -> Result<Graph> {
    let text = fs::read_to_string(path)?;
    parse_graph(&text, format)
}

pub fn write_graph(g: &Graph, path: impl AsRef<Path>, format: GraphFormat) -> Result<()> {
    fs::write(path, format_graph(g, format))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_list_p3() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(to_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list("three 2\n"), Err(Error::Format(_))));
        assert!(matches!(parse_edge_list(""), Err(Error::Format(_))));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Format(_))));
        assert!(matches!(parse_edge_list("3 1\n0 5\n"), Err(Error::Format(_))));
        assert!(matches!(parse_edge_list("3 1\n0 1 2\n"), Err(Error::Format(_))));
    }

    #[test]
    fn graph6_known_strings() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(to_graph6(&p3), "Bg");
        assert_eq!(parse_graph6("Bg").unwrap(), p3);
        let k4 = parse_graph6("C~").unwrap();
        assert!(k4.is_complete());
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
    }

    #[test]
    fn graph6_errors() {
        assert!(matches!(parse_graph6("C"), Err(Error::Format(_))));
        assert!(matches!(parse_graph6(""), Err(Error::Format(_))));
        assert!(matches!(parse_graph6("C\x10"), Err(Error::Format(_))));
    }

    #[test]
    fn graph6_long_form_round_trip() {
        let edges: Vec<_> = (1..70).map(|i| (i - 1, i)).collect();
        let g = Graph::from_edges(70, &edges).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }
}
