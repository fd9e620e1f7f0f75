//! Plain-text graph documents.
//!
//! Line 1 holds the vertex count; every following `u v` line is one edge
//! with 0-based ids. Lines starting with `#` are comments, except
//! `# name <id> <label>` lines, which attach a display label to a vertex.
//! The canonical form (what [`serialize_document`] emits) lists name lines
//! right after the header and edges in sorted order, LF-terminated.

use std::collections::BTreeMap;

use megset::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: expected a vertex count header")]
    BadHeader { line: usize },
    #[error("line {line}: expected an edge as two vertex ids")]
    BadEdge { line: usize },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: endpoint {vertex} out of range for {n} vertices")]
    OutOfRange { line: usize, vertex: usize, n: usize },
    #[error("line {line}: duplicate edge ({u}, {v})")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("line {line}: malformed name entry")]
    BadName { line: usize },
    #[error("line {line}: duplicate name for vertex {vertex}")]
    DuplicateName { line: usize, vertex: usize },
    #[error("missing vertex count header")]
    Empty,
}

/// A parsed graph plus its optional vertex labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub names: BTreeMap<usize, String>,
}

impl GraphDocument {
    pub fn unnamed(graph: Graph) -> Self {
        GraphDocument {
            graph,
            names: BTreeMap::new(),
        }
    }
}

pub fn parse_document(text: &str) -> Result<GraphDocument, FormatError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: std::collections::HashSet<(usize, usize)> = std::collections::HashSet::new();
    let mut names: BTreeMap<usize, String> = BTreeMap::new();
    let mut name_lines: Vec<(usize, usize, String)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim_start();
            if let Some(rest) = comment.strip_prefix("name ") {
                let mut parts = rest.splitn(2, char::is_whitespace);
                let id = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or(FormatError::BadName { line })?;
                let label = parts
                    .next()
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .ok_or(FormatError::BadName { line })?;
                name_lines.push((line, id, label.to_string()));
            }
            continue;
        }
        match n {
            None => {
                n = Some(
                    trimmed
                        .parse::<usize>()
                        .map_err(|_| FormatError::BadHeader { line })?,
                );
            }
            Some(count) => {
                let mut parts = trimmed.split_whitespace();
                let u = parts.next().and_then(|s| s.parse::<usize>().ok());
                let v = parts.next().and_then(|s| s.parse::<usize>().ok());
                let (u, v) = match (u, v, parts.next()) {
                    (Some(u), Some(v), None) => (u, v),
                    _ => return Err(FormatError::BadEdge { line }),
                };
                if u == v {
                    return Err(FormatError::SelfLoop { line, vertex: u });
                }
                for w in [u, v] {
                    if w >= count {
                        return Err(FormatError::OutOfRange {
                            line,
                            vertex: w,
                            n: count,
                        });
                    }
                }
                let canonical = (u.min(v), u.max(v));
                if !seen.insert(canonical) {
                    return Err(FormatError::DuplicateEdge {
                        line,
                        u: canonical.0,
                        v: canonical.1,
                    });
                }
                edges.push(canonical);
            }
        }
    }

    let n = n.ok_or(FormatError::Empty)?;
    for (line, id, label) in name_lines {
        if id >= n {
            return Err(FormatError::OutOfRange {
                line,
                vertex: id,
                n,
            });
        }
        if names.insert(id, label).is_some() {
            return Err(FormatError::DuplicateName { line, vertex: id });
        }
    }
    let graph = Graph::new(n, &edges).expect("edges validated during parsing");
    Ok(GraphDocument { graph, names })
}

/// Canonical text form: header, name lines, then edges in sorted order.
pub fn serialize_document(doc: &GraphDocument) -> String {
    let mut out = String::new();
    out.push_str(&doc.graph.vertex_count().to_string());
    out.push('\n');
    for (id, label) in &doc.names {
        out.push_str(&format!("# name {id} {label}\n"));
    }
    let mut edges = doc.graph.edges().to_vec();
    edges.sort_unstable();
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
