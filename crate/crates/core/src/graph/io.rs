//! Edge-list text, JSON and DOT formats.
//!
//! Edge list: a header line `n m`, then `m` lines `u v` with 0-based ids.
//! Blank lines and lines starting with `#` are skipped.
//!
//! JSON: `{"n": 5, "edges": [[0,1], ...], "names": {"0": "u1", ...}}` where
//! `names` is optional.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Edge, Graph};
use crate::error::{Error, Result};

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    names: BTreeMap<String, String>,
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse { line: 1, message: "empty input".into() })?;
    let [n, m] = parse_pair(line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, text) in lines {
        if edges.len() == m {
            return Err(Error::Parse { line, message: format!("more than the declared {m} edges") });
        }
        let [u, v] = parse_pair(line, text)?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse { line, message: format!("invalid edge {u} {v} for n = {n}") });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::new(n, edges)
}

fn parse_pair(line: usize, text: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::Parse { line, message: format!("expected two integers, got `{text}`") });
    }
    let num = |s: &str| s.parse::<usize>().map_err(|e| Error::Parse { line, message: format!("`{s}`: {e}") });
    Ok([num(fields[0])?, num(fields[1])?])
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text)?;
    let g = Graph::new(raw.n, raw.edges.iter().map(|&[u, v]| (u, v)))?;
    let mut names = BTreeMap::new();
    for (key, name) in raw.names {
        let v =
            key.parse::<usize>().map_err(|e| Error::Parse { line: 1, message: format!("name key `{key}`: {e}") })?;
        names.insert(v, name);
    }
    g.with_names(names)
}

pub fn to_json_value(g: &Graph) -> serde_json::Value {
    let raw = GraphJson {
        n: g.n(),
        edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
        names: g.names().iter().map(|(v, s)| (v.to_string(), s.clone())).collect(),
    };
    serde_json::to_value(raw).expect("graph json")
}

pub fn to_json(g: &Graph) -> String {
    to_json_value(g).to_string()
}

/// Parses JSON when the first non-blank character is `{`, an edge list otherwise.
pub fn parse_auto(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

/// Role of an edge in a DOT rendering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Plain,
    Mono,
    Removed,
}

impl EdgeClass {
    fn as_str(self) -> &'static str {
        match self {
            EdgeClass::Plain => "plain",
            EdgeClass::Mono => "mono",
            EdgeClass::Removed => "removed",
        }
    }

    fn style(self) -> &'static str {
        match self {
            EdgeClass::Plain => "",
            EdgeClass::Mono => ", color=red, penwidth=2",
            EdgeClass::Removed => ", style=dashed, color=gray",
        }
    }
}

/// Renders `g` as an undirected DOT graph. Edges missing from `classes` are plain.
pub fn to_dot(g: &Graph, classes: &BTreeMap<Edge, EdgeClass>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.name(v).replace('"', "\\\""));
    }
    for e @ &(u, v) in g.edges() {
        let class = classes.get(e).copied().unwrap_or(EdgeClass::Plain);
        let _ = writeln!(out, "  {u} -- {v} [class=\"{}\"{}];", class.as_str(), class.style());
    }
    out.push_str("}\n");
    out
}
