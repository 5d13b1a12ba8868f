//! graph6 and edge-list text formats.
//!
//! graph6 follows the standard encoding (no `>>graph6<<` header is written;
//! one is tolerated on input). The edge-list format is one `u v` pair per line,
//! `#` starts a comment, and a line with a single token declares a vertex with
//! no edges. Integer tokens are used as 0-based indices; if any token is not an
//! integer, all tokens are treated as labels numbered by first appearance.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Graph6,
    #[serde(rename = "edgelist")]
    EdgeList,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(Format::Graph6),
            "edgelist" | "edge-list" | "edges" => Ok(Format::EdgeList),
            other => Err(Error::InvalidParameter(format!("unknown graph format '{other}'"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Graph6 => "graph6",
            Format::EdgeList => "edgelist",
        })
    }
}

/// A parsed graph plus any non-fatal warnings (collapsed duplicate edges).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parsed {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

pub fn parse_graph(text: &str, format: Format) -> Result<Parsed> {
    match format {
        Format::Graph6 => Ok(Parsed { graph: parse_graph6(text)?, warnings: Vec::new() }),
        Format::EdgeList => parse_edge_list(text),
    }
}

pub fn serialize_graph(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => to_graph6(g),
        Format::EdgeList => to_edge_list(g),
    }
}

const G6_HEADER: &str = ">>graph6<<";

fn g6_err(message: impl Into<String>) -> Error {
    Error::Parse { line: 1, message: message.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(g6_err(format!("byte {b:#04x} outside the graph6 range")));
    }
    let values: Vec<u64> = bytes.iter().map(|&b| u64::from(b - 63)).collect();
    let (n, body) = match values.as_slice() {
        [] => return Err(g6_err("empty input")),
        [63, 63, rest @ ..] => {
            if rest.len() < 6 {
                return Err(g6_err("truncated 36-bit vertex count"));
            }
            (rest[..6].iter().fold(0, |acc, &v| (acc << 6) | v), &rest[6..])
        }
        [63, rest @ ..] => {
            if rest.len() < 3 {
                return Err(g6_err("truncated 18-bit vertex count"));
            }
            (rest[..3].iter().fold(0, |acc, &v| (acc << 6) | v), &rest[3..])
        }
        [first, rest @ ..] => (*first, rest),
    };
    let n = usize::try_from(n).map_err(|_| g6_err("vertex count too large"))?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(g6_err(format!("expected {expected} adjacency bytes for {n} vertices, found {}", body.len())));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (body[k / 6] >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if k % 6 != 0 && body[k / 6] & ((1 << (6 - k % 6)) - 1) != 0 {
        return Err(g6_err("nonzero padding bits"));
    }
    Graph::from_edges(n, &edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8);
    } else if n <= 258_047 {
        out.push(63);
        out.extend((0..3).rev().map(|s| ((n >> (6 * s)) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|s| ((n as u64 >> (6 * s)) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (6 - filled));
    }
    out.into_iter().map(|v| char::from(v + 63)).collect()
}

pub fn parse_edge_list(text: &str) -> Result<Parsed> {
    let mut rows: Vec<(usize, Vec<&str>)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.len() {
            0 => {}
            1 | 2 => rows.push((i + 1, tokens)),
            _ => {
                return Err(Error::Parse {
                    line: i + 1,
                    message: format!("expected 'u v', found {} tokens", tokens.len()),
                })
            }
        }
    }

    let numeric = rows.iter().all(|(_, t)| t.iter().all(|s| s.parse::<usize>().is_ok()));
    let mut labels: HashMap<&str, usize> = HashMap::new();
    let mut n = 0;
    let mut edges = Vec::new();
    for (line, tokens) in &rows {
        let mut ids = Vec::with_capacity(2);
        for &t in tokens {
            let id = if numeric {
                t.parse().expect("checked numeric")
            } else {
                let next = labels.len();
                *labels.entry(t).or_insert(next)
            };
            ids.push(id);
        }
        n = n.max(ids.iter().max().map_or(0, |&m| m + 1));
        if let [u, v] = ids[..] {
            if u == v {
                return Err(Error::Parse { line: *line, message: format!("self-loop at vertex {u}") });
            }
            edges.push((u, v));
        }
    }
    let (graph, dups) = Graph::from_edges_collapsing(n, &edges)?;
    let warnings = dups.iter().map(|(u, v)| format!("duplicate edge {u}-{v} collapsed")).collect();
    Ok(Parsed { graph, warnings })
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        // Declaring isolated vertices keeps the vertex count through a round trip.
        if g.degree(v) == 0 {
            out.push_str(&format!("{v}\n"));
        }
        for &w in g.neighbors(v).iter().filter(|&&w| w > v) {
            out.push_str(&format!("{v} {w}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn edge_list_examples() {
        let p = parse_edge_list("0 1\n1 2").unwrap();
        assert_eq!(p.graph, path(3));
        assert!(p.warnings.is_empty());
        assert!(matches!(parse_edge_list("0 0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn edge_list_comments_duplicates_and_labels() {
        let p = parse_edge_list("# header\n0 1 # trailing\n\n1 0\n1 2\n4\n").unwrap();
        assert_eq!(p.graph.n(), 5);
        assert_eq!(p.graph.edge_count(), 2);
        assert_eq!(p.warnings, vec!["duplicate edge 0-1 collapsed".to_string()]);

        let p = parse_edge_list("a b\nb c\n").unwrap();
        assert_eq!(p.graph, path(3));
        assert!(matches!(parse_edge_list("0 1 2"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn edge_list_keeps_isolated_vertices() {
        let g = Graph::from_edges(4, &[(1, 2)]).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(text, "0\n1 2\n3\n");
        assert_eq!(parse_edge_list(&text).unwrap().graph, g);
    }

    #[test]
    fn graph6_star_example() {
        // Five vertices, all joined to vertex 4.
        let g = parse_graph6("D?{").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
        assert_eq!(to_graph6(&star(4)), "Ds_");
    }

    #[test]
    fn graph6_header_and_errors() {
        assert_eq!(parse_graph6(">>graph6<<Ds_\n").unwrap(), star(4));
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("D?").is_err());
        assert!(parse_graph6("D?{?").is_err());
        assert!(parse_graph6("B@").is_err(), "padding bits must be zero");
        assert!(parse_graph6("D ?").is_err());
    }

    #[test]
    fn graph6_large_vertex_count() {
        let g = Graph::from_edges(100, &[(0, 99), (5, 6)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn format_names() {
        assert_eq!("graph6".parse::<Format>().unwrap(), Format::Graph6);
        assert_eq!("edgelist".parse::<Format>().unwrap(), Format::EdgeList);
        assert!("xml".parse::<Format>().is_err());
    }
}
