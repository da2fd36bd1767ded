//! On-disk graph formats.
//!
//! The primary format is line-oriented text with a stable ordering, so
//! serialization is byte-exact reproducible:
//!
//! ```text
//! signedgraph 1
//! v 0 optional-label
//! v 1
//! e 0 1 +
//! ```
//!
//! `#` starts a comment. A JSON mirror of the same content is accepted on
//! input (detected by a leading `{`) and selected on output by flag. Digraph
//! files use the header `digraph 1` with `a <from> <to>` arc lines.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Digraph, GraphError, Sign, SignedGraph};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("invalid structured graph: {0}")]
    Json(String),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Serializes with sorted vertex lines (every vertex listed, labelled or
/// not) followed by sorted edge lines.
pub fn serialize_graph(g: &SignedGraph) -> String {
    let mut out = String::from("signedgraph 1\n");
    for v in 0..g.n() {
        match g.labels().get(&v) {
            Some(label) => out.push_str(&format!("v {v} {label}\n")),
            None => out.push_str(&format!("v {v}\n")),
        }
    }
    for (u, v, s) in g.edges() {
        out.push_str(&format!("e {u} {v} {}\n", s.as_char()));
    }
    out
}

/// Accepts both the text format and the JSON mirror.
pub fn parse_graph(text: &str) -> Result<SignedGraph, ParseError> {
    if text.trim_start().starts_with('{') {
        return parse_graph_json(text);
    }
    parse_graph_text(text)
}

fn parse_graph_text(text: &str) -> Result<SignedGraph, ParseError> {
    let mut saw_header = false;
    let mut max_vertex: Option<usize> = None;
    let mut labels: BTreeMap<usize, String> = BTreeMap::new();
    let mut edges: Vec<(usize, usize, Sign)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !saw_header {
            if fields != ["signedgraph", "1"] {
                return Err(syntax(lineno, "expected header `signedgraph 1`"));
            }
            saw_header = true;
            continue;
        }
        match fields[0] {
            "v" => {
                if fields.len() < 2 || fields.len() > 3 {
                    return Err(syntax(lineno, "expected `v <id> [label]`"));
                }
                let id: usize = fields[1]
                    .parse()
                    .map_err(|_| syntax(lineno, "vertex id must be an integer"))?;
                max_vertex = Some(max_vertex.map_or(id, |m| m.max(id)));
                if fields.len() == 3 {
                    labels.insert(id, fields[2].to_string());
                }
            }
            "e" => {
                if fields.len() != 4 {
                    return Err(syntax(lineno, "expected `e <u> <v> <+|->`"));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| syntax(lineno, "endpoint must be an integer"))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| syntax(lineno, "endpoint must be an integer"))?;
                let sign = fields[3]
                    .chars()
                    .next()
                    .and_then(Sign::from_char)
                    .filter(|_| fields[3].len() == 1)
                    .ok_or_else(|| syntax(lineno, "sign must be `+` or `-`"))?;
                max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u).max(v)));
                edges.push((u, v, sign));
            }
            other => return Err(syntax(lineno, format!("unknown directive `{other}`"))),
        }
    }
    if !saw_header {
        return Err(syntax(1, "missing header `signedgraph 1`"));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    let mut g = SignedGraph::build(n, &edges)
        .map_err(|source| ParseError::Graph { line: 0, source })?;
    for (v, label) in labels {
        g.set_label(v, label).expect("label ids bounded the vertex count");
    }
    Ok(g)
}

/// JSON mirror of the graph file.
#[derive(Serialize, Deserialize)]
pub struct GraphJson {
    pub format: String,
    pub version: u32,
    pub n: usize,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub labels: BTreeMap<usize, String>,
    pub edges: Vec<(usize, usize, char)>,
}

pub fn serialize_graph_json(g: &SignedGraph) -> String {
    let doc = GraphJson {
        format: "signedgraph".into(),
        version: 1,
        n: g.n(),
        labels: g.labels().clone(),
        edges: g.edges().into_iter().map(|(u, v, s)| (u, v, s.as_char())).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("graph serializes") + "\n"
}

fn parse_graph_json(text: &str) -> Result<SignedGraph, ParseError> {
    let doc: GraphJson =
        serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
    if doc.format != "signedgraph" || doc.version != 1 {
        return Err(ParseError::Json("expected signedgraph version 1".into()));
    }
    let mut edges = Vec::with_capacity(doc.edges.len());
    for &(u, v, c) in &doc.edges {
        let sign = Sign::from_char(c)
            .ok_or_else(|| ParseError::Json(format!("bad sign `{c}` on edge {u}-{v}")))?;
        edges.push((u, v, sign));
    }
    let mut g = SignedGraph::build(doc.n, &edges)
        .map_err(|source| ParseError::Graph { line: 0, source })?;
    for (v, label) in doc.labels {
        g.set_label(v, label).map_err(|source| ParseError::Graph { line: 0, source })?;
    }
    Ok(g)
}

/// Arc-list digraph files: header `digraph 1`, `v` lines as in graph files,
/// `a <from> <to>` arcs.
pub fn parse_digraph(text: &str) -> Result<Digraph, ParseError> {
    let mut saw_header = false;
    let mut max_vertex: Option<usize> = None;
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if !saw_header {
            if fields != ["digraph", "1"] {
                return Err(syntax(lineno, "expected header `digraph 1`"));
            }
            saw_header = true;
            continue;
        }
        match fields[0] {
            "v" => {
                if fields.len() < 2 || fields.len() > 3 {
                    return Err(syntax(lineno, "expected `v <id> [label]`"));
                }
                let id: usize = fields[1]
                    .parse()
                    .map_err(|_| syntax(lineno, "vertex id must be an integer"))?;
                max_vertex = Some(max_vertex.map_or(id, |m| m.max(id)));
            }
            "a" => {
                if fields.len() != 3 {
                    return Err(syntax(lineno, "expected `a <from> <to>`"));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| syntax(lineno, "endpoint must be an integer"))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| syntax(lineno, "endpoint must be an integer"))?;
                max_vertex = Some(max_vertex.map_or(u.max(v), |m| m.max(u).max(v)));
                arcs.push((u, v));
            }
            other => return Err(syntax(lineno, format!("unknown directive `{other}`"))),
        }
    }
    if !saw_header {
        return Err(syntax(1, "missing header `digraph 1`"));
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    Digraph::build(n, &arcs).map_err(|source| ParseError::Graph { line: 0, source })
}

/// DOT rendering: positive edges blue, negative edges red.
pub fn to_dot(g: &SignedGraph) -> String {
    let mut out = String::from("graph signed {\n");
    for v in 0..g.n() {
        match g.labels().get(&v) {
            Some(label) => out.push_str(&format!("  {v} [label=\"{label}\"];\n")),
            None => out.push_str(&format!("  {v};\n")),
        }
    }
    for (u, v, s) in g.edges() {
        let colour = match s {
            Sign::Positive => "blue",
            Sign::Negative => "red",
        };
        out.push_str(&format!("  {u} -- {v} [color={colour}];\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{Negative as N, Positive as P};

    fn sample() -> SignedGraph {
        let mut g = SignedGraph::build(4, &[(0, 1, N), (1, 2, P), (2, 3, N), (3, 0, N)]).unwrap();
        g.set_label(0, "a").unwrap();
        g
    }

    #[test]
    fn text_round_trip_is_exact() {
        let g = sample();
        let text = serialize_graph(&g);
        let back = parse_graph(&text).unwrap();
        assert_eq!(back, g);
        assert_eq!(serialize_graph(&back), text);
    }

    #[test]
    fn json_round_trip_is_exact() {
        let g = sample();
        let back = parse_graph(&serialize_graph_json(&g)).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn comments_and_isolated_vertices() {
        let text = "# leading comment\nsignedgraph 1\nv 0\nv 3 far\ne 0 1 + # trailing\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 1);
        assert_eq!(g.labels().get(&3), Some(&"far".to_string()));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let e = parse_graph("signedgraph 1\ne 0 1 *\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 2, .. }), "{e}");
        let e = parse_graph("nope\n").unwrap_err();
        assert!(matches!(e, ParseError::Syntax { line: 1, .. }));
        // Loops are graph errors, reported as such.
        let e = parse_graph("signedgraph 1\ne 1 1 +\n").unwrap_err();
        assert!(matches!(e, ParseError::Graph { .. }));
    }

    #[test]
    fn digraph_parsing() {
        let d = parse_digraph("digraph 1\na 0 1\na 1 0\na 1 2\n").unwrap();
        assert_eq!(d.n(), 3);
        assert!(d.has_arc(0, 1) && d.has_arc(1, 0) && d.has_arc(1, 2));
        assert!(!d.has_arc(2, 1));
    }

    #[test]
    fn dot_output_colours_signs() {
        let dot = to_dot(&sample());
        assert_eq!(dot.matches("color=red").count(), 3);
        assert_eq!(dot.matches("color=blue").count(), 1);
        assert!(dot.contains("label=\"a\""));
    }
}
