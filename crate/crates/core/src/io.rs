//! Graph ingestion (JSON and plain edge-list text) and DOT export for
//! graphs and annotated walks.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Walk};

#[derive(serde::Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default)]
    labels: Option<Vec<String>>,
}

/// Parses the JSON object form {"n": int, "edges": [[u,v],...], "labels": [...]}.
pub fn parse_json_graph(text: &str) -> Result<Graph> {
    let parsed: JsonGraph =
        serde_json::from_str(text).map_err(|e| Error::input(format!("graph JSON: {e}")))?;
    let g = Graph::from_edges(parsed.n, &parsed.edges)?;
    match parsed.labels {
        Some(labels) => g.with_labels(labels),
        None => Ok(g),
    }
}

/// Parses plain edge-list text, one "u v" pair per line. Vertex names are
/// arbitrary tokens; they are mapped to dense indices (numerically when all
/// tokens are numeric, lexicographically otherwise) and kept as labels.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut names: Vec<String> = Vec::new();
    let mut raw_edges: Vec<(String, String)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u.to_string(), v.to_string()),
            _ => {
                return Err(Error::input(format!(
                    "line {}: expected 'u v', got '{line}'",
                    lineno + 1
                )))
            }
        };
        for t in [&u, &v] {
            if !names.contains(t) {
                names.push(t.clone());
            }
        }
        raw_edges.push((u, v));
    }
    if names.is_empty() {
        return Err(Error::input("edge list is empty"));
    }
    let all_numeric = names.iter().all(|t| t.parse::<i64>().is_ok());
    if all_numeric {
        names.sort_by_key(|t| t.parse::<i64>().unwrap());
    } else {
        names.sort();
    }
    let index: BTreeMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_str(), i))
        .collect();
    let edges: Vec<(usize, usize)> = raw_edges
        .iter()
        .map(|(u, v)| (index[u.as_str()], index[v.as_str()]))
        .collect();
    Graph::from_edges(names.len(), &edges)?.with_labels(names)
}

/// Loads a graph from text, auto-detecting the format.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json_graph(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn graph_to_json(g: &Graph) -> serde_json::Value {
    let mut obj = serde_json::json!({
        "n": g.n(),
        "edges": g.edges(),
    });
    if let Some(labels) = g.labels() {
        obj["labels"] = serde_json::json!(labels);
    }
    obj
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {} [label=\"{}\"];\n", v, g.label(v)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// DOT export with the walk rendered as per-vertex step annotations.
pub fn walk_to_dot(g: &Graph, walk: &Walk) -> String {
    let mut steps: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &v) in walk.0.iter().enumerate() {
        steps[v].push(i);
    }
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        let note = if steps[v].is_empty() {
            String::new()
        } else {
            format!(
                "\\nsteps {}",
                steps[v]
                    .iter()
                    .map(|s| s.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        let style = if steps[v].is_empty() { "" } else { ", style=filled" };
        out.push_str(&format!(
            "  {} [label=\"{}{}\"{}];\n",
            v,
            g.label(v),
            note,
            style
        ));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_roundtrip() {
        let g = parse_json_graph(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(g.n(), 3);
        let back = graph_to_json(&g);
        let again = parse_json_graph(&back.to_string()).unwrap();
        assert_eq!(again.edges(), g.edges());
    }

    #[test]
    fn edge_list_labels_preserved() {
        let g = parse_edge_list("5 9\n9 12\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.labels().unwrap(), &["5", "9", "12"]);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_json_graph(r#"{"n":2}"#).is_err());
        assert!(parse_edge_list("0 1\n3 4\n").is_err(), "disconnected");
    }

    #[test]
    fn dot_smoke() {
        let g = crate::families::make_path(3);
        let dot = graph_to_dot(&g);
        assert!(dot.contains("0 -- 1"));
        let walk = Walk(vec![0, 1, 2]);
        let wd = walk_to_dot(&g, &walk);
        assert!(wd.contains("steps 1"));
    }
}
