//! Edge-list text files.
//!
//! One edge per line, `u<TAB>v<TAB>w`, with `#` starting a comment line.
//! Lines without a tab are split on any run of whitespace instead, which
//! accepts the space-separated dumps many datasets ship as. Nodes get dense
//! indices in order of first appearance.
//!
//! Isolated nodes have no edge line of their own. [`write_edge_list`] keeps
//! them as `#@node<TAB>label` lines, which other readers skip as comments and
//! [`parse_edge_list`] turns back into nodes.

use std::collections::HashSet;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use adjcent_core::{symmetrize_directed, Error as GraphError, GraphBuilder, WeightedGraph};
use thiserror::Error;

const NODE_DIRECTIVE: &str = "#@node";

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: io::Error,
    },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

struct Row<'a> {
    line: usize,
    u: &'a str,
    v: &'a str,
    w: f64,
}

enum Item<'a> {
    Edge(Row<'a>),
    Node(&'a str),
}

fn items(text: &str) -> impl Iterator<Item = Result<Item<'_>, LoadError>> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = i + 1;
        let raw = raw.trim_end_matches('\r');
        if let Some(rest) = raw.strip_prefix(NODE_DIRECTIVE) {
            let label = rest.trim();
            return (!label.is_empty()).then_some(Ok(Item::Node(label)));
        }
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            return None;
        }
        let fields: Vec<&str> = if raw.contains('\t') {
            raw.split('\t').map(str::trim).collect()
        } else {
            trimmed.split_whitespace().collect()
        };
        if fields.len() != 3 || fields[0].is_empty() || fields[1].is_empty() {
            return Some(Err(LoadError::Malformed {
                line,
                message: format!("expected `u<TAB>v<TAB>w`, found {} field(s)", fields.len()),
            }));
        }
        let w = match fields[2].parse::<f64>() {
            Ok(w) => w,
            Err(_) => {
                return Some(Err(LoadError::Malformed {
                    line,
                    message: format!("weight `{}` is not a number", fields[2]),
                }))
            }
        };
        Some(Ok(Item::Edge(Row {
            line,
            u: fields[0],
            v: fields[1],
            w,
        })))
    })
}

/// Parses an undirected edge list. Duplicate pairs (in either orientation),
/// self-loops and weights that are not finite and positive are errors.
pub fn parse_edge_list(text: &str) -> Result<WeightedGraph, LoadError> {
    let mut builder = GraphBuilder::new();
    for item in items(text) {
        match item? {
            Item::Node(label) => {
                builder.node(label);
            }
            Item::Edge(row) => builder
                .add_edge(row.u, row.v, row.w)
                .map_err(|source| LoadError::Graph {
                    line: row.line,
                    source,
                })?,
        }
    }
    Ok(builder.build())
}

/// Parses the same format as directed arcs and folds each pair of opposite
/// arcs into one undirected edge carrying their summed weight. Self-loops are
/// dropped; their node is kept.
pub fn parse_directed_edge_list(text: &str) -> Result<WeightedGraph, LoadError> {
    let mut arcs: Vec<(&str, &str, f64)> = Vec::new();
    let mut seen = HashSet::new();
    let mut loops = HashSet::new();
    for item in items(text) {
        let (u, v, w) = match item? {
            Item::Node(label) => (label, label, 1.0),
            Item::Edge(row) => {
                if !(row.w.is_finite() && row.w > 0.0) {
                    return Err(LoadError::Graph {
                        line: row.line,
                        source: GraphError::InvalidWeight(row.w),
                    });
                }
                if !seen.insert((row.u, row.v)) {
                    return Err(LoadError::Graph {
                        line: row.line,
                        source: GraphError::DuplicateEdge(row.u.to_string(), row.v.to_string()),
                    });
                }
                (row.u, row.v, row.w)
            }
        };
        // A single self-loop per node keeps it in first-appearance order;
        // symmetrizing drops the loop itself.
        if u != v || loops.insert(u) {
            arcs.push((u, v, w));
        }
    }
    symmetrize_directed(&arcs).map_err(|source| LoadError::Graph { line: 0, source })
}

fn read(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_edge_list(path: &Path) -> Result<WeightedGraph, LoadError> {
    parse_edge_list(&read(path)?)
}

pub fn load_directed_edge_list(path: &Path) -> Result<WeightedGraph, LoadError> {
    parse_directed_edge_list(&read(path)?)
}

/// Writes `g` in the format read by [`parse_edge_list`]. Weights use the
/// shortest decimal form that parses back to the same value.
pub fn write_edge_list<W: Write>(g: &WeightedGraph, mut out: W) -> io::Result<()> {
    let mut touched = vec![false; g.node_count()];
    for e in g.edges() {
        touched[e.u] = true;
        touched[e.v] = true;
    }
    for (u, _) in touched.iter().enumerate().filter(|(_, &t)| !t) {
        writeln!(out, "{NODE_DIRECTIVE}\t{}", g.labels()[u])?;
    }
    for e in g.edges() {
        writeln!(out, "{}\t{}\t{}", g.labels()[e.u], g.labels()[e.v], e.weight)?;
    }
    out.flush()
}

pub fn edge_list_string(g: &WeightedGraph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to memory cannot fail");
    String::from_utf8(buf).expect("labels are UTF-8")
}
