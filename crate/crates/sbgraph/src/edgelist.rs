//! Plain-text edge lists. One arc per line as two nonnegative integer
//! labels, `#` comments, blank lines ignored, LF or CRLF. An optional first
//! line `nodes <k>` declares the vertex set 0..k-1 up front (the only way to
//! get isolated vertices); without it, labels are compressed to dense ids in
//! first-appearance order and kept as display labels.

use std::collections::HashMap;
use std::fmt;

use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

fn err(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError { line, msg: msg.into() }
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Digraph,
    /// Repeated arc lines are dropped, not errors; callers may warn.
    pub duplicates_dropped: usize,
}

pub fn parse_edge_list(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut declared: Option<u32> = None;
    let mut seen_content = false;
    let mut label_ids: HashMap<u64, u32> = HashMap::new();
    let mut labels: Vec<u64> = Vec::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();
    let mut pair_lines: Vec<usize> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens[0] == "nodes" {
            if seen_content {
                return Err(err(lineno, "header 'nodes' must be the first content line"));
            }
            if tokens.len() != 2 {
                return Err(err(lineno, "expected 'nodes <count>'"));
            }
            let k: u32 = tokens[1]
                .parse()
                .map_err(|_| err(lineno, format!("bad vertex count '{}'", tokens[1])))?;
            declared = Some(k);
            seen_content = true;
            continue;
        }
        seen_content = true;
        if tokens.len() != 2 {
            return Err(err(lineno, format!("expected two integers, found {} tokens", tokens.len())));
        }
        let mut ends = [0u64; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| err(lineno, format!("bad vertex label '{tok}'")))?;
        }
        let [u, v] = ends;
        if u == v {
            return Err(err(lineno, format!("self-loop {u} {v}")));
        }
        let pair = match declared {
            Some(k) => {
                for &x in &[u, v] {
                    if x >= k as u64 {
                        return Err(err(
                            lineno,
                            format!("vertex {x} outside declared range 0..{k}"),
                        ));
                    }
                }
                (u as u32, v as u32)
            }
            None => {
                let mut id_of = |lab: u64| -> u32 {
                    *label_ids.entry(lab).or_insert_with(|| {
                        labels.push(lab);
                        labels.len() as u32 - 1
                    })
                };
                (id_of(u), id_of(v))
            }
        };
        pairs.push(pair);
        pair_lines.push(lineno);
    }

    let n = declared.unwrap_or(labels.len() as u32);
    let (graph, duplicates_dropped) = Digraph::build(n, &pairs)
        .map_err(|e| err(pair_lines.last().copied().unwrap_or(0), e.to_string()))?;
    let graph = match declared {
        Some(_) => graph,
        None if labels.is_empty() => graph,
        None => graph.with_labels(labels),
    };
    Ok(ParsedGraph { graph, duplicates_dropped })
}

/// Inverse of [`parse_edge_list`] up to label mapping. Graphs with identity
/// ids get a `nodes` header so isolated vertices survive the round trip;
/// labeled graphs are emitted as bare label pairs.
pub fn serialize_edge_list(g: &Digraph) -> String {
    let mut out = String::new();
    if g.labels().is_none() {
        out.push_str(&format!("nodes {}\n", g.vertex_count()));
    }
    for a in g.arcs() {
        out.push_str(&format!("{} {}\n", g.label_of(a.tail), g.label_of(a.head)));
    }
    out
}
