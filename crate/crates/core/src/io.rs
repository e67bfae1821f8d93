//! Graph files: DIMACS edge format (1-based) and a JSON document (0-based).
//!
//! Writers emit edges as sorted `u < v` pairs, so reading a file and writing
//! it back reproduces it up to edge order and duplicates.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("missing `p edge n m` header")]
    MissingHeader,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("label list has {got} entries for {n} vertices")]
    LabelCount { got: usize, n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Dimacs,
    Json,
}

/// A graph whose vertices carry external names; `labels[i]` names vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Option<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
struct GraphDocument {
    n: usize,
    edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    labels: Option<Vec<String>>,
}

pub fn parse_dimacs(text: &str) -> Result<Graph, IoError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut parts = raw.split_whitespace();
        let err = |msg: &str| IoError::Parse {
            line,
            msg: msg.to_string(),
        };
        match parts.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(err("second `p` line"));
                }
                let kind = parts.next().ok_or_else(|| err("incomplete header"))?;
                if kind != "edge" && kind != "col" {
                    return Err(err("expected `p edge`"));
                }
                let count = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err("bad vertex count"))?;
                n = Some(count);
            }
            Some("e") => {
                if n.is_none() {
                    return Err(err("edge before header"));
                }
                let mut ends = [0usize; 2];
                for end in &mut ends {
                    let v = parts
                        .next()
                        .and_then(|s| s.parse::<usize>().ok())
                        .ok_or_else(|| err("bad edge endpoint"))?;
                    if v == 0 {
                        return Err(err("DIMACS ids are 1-based"));
                    }
                    *end = v - 1;
                }
                edges.push((ends[0], ends[1]));
            }
            Some(other) => return Err(err(&format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or(IoError::MissingHeader)?;
    Ok(Graph::build(n, edges)?)
}

pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

pub fn parse_json(text: &str) -> Result<LabeledGraph, IoError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    if let Some(labels) = &doc.labels {
        if labels.len() != doc.n {
            return Err(IoError::LabelCount {
                got: labels.len(),
                n: doc.n,
            });
        }
    }
    let graph = Graph::build(doc.n, doc.edges.iter().map(|e| (e[0], e[1])))?;
    Ok(LabeledGraph {
        graph,
        labels: doc.labels,
    })
}

pub fn to_json(g: &Graph, labels: Option<&[String]>) -> String {
    let doc = GraphDocument {
        n: g.n(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
        labels: labels.map(<[String]>::to_vec),
    };
    serde_json::to_string(&doc).expect("graph documents always serialise")
}

pub fn parse(text: &str, format: Format) -> Result<LabeledGraph, IoError> {
    match format {
        Format::Dimacs => Ok(LabeledGraph {
            graph: parse_dimacs(text)?,
            labels: None,
        }),
        Format::Json => parse_json(text),
    }
}

/// Reads whitespace-separated `a b` pairs with arbitrary vertex names,
/// numbering names by first appearance. Lines starting with `#` are skipped.
pub fn parse_labeled_edge_list(text: &str) -> Result<LabeledGraph, IoError> {
    let mut ids: HashMap<String, usize> = HashMap::new();
    let mut labels = Vec::new();
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let names: Vec<&str> = line.split_whitespace().collect();
        if names.len() != 2 {
            return Err(IoError::Parse {
                line: idx + 1,
                msg: "expected two vertex names".into(),
            });
        }
        let mut ends = [0usize; 2];
        for (end, name) in ends.iter_mut().zip(&names) {
            *end = *ids.entry(name.to_string()).or_insert_with(|| {
                labels.push(name.to_string());
                labels.len() - 1
            });
        }
        edges.push((ends[0], ends[1]));
    }
    let graph = Graph::build(labels.len(), edges)?;
    Ok(LabeledGraph {
        graph,
        labels: Some(labels),
    })
}
