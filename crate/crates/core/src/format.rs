//! Edge-list text format.
//!
//! ```text
//! # comment
//! n m
//! u v
//! ...
//! ```
//!
//! Vertices are 0-indexed. Lines starting with `#` and blank lines are
//! skipped. [`serialize`] writes edges in sorted order.

use std::fmt::Write;

use crate::graph::{Edge, Graph, GraphError};

pub fn parse(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or_else(|| GraphError::Syntax {
        line: 1,
        message: "missing \"n m\" header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        if edges.len() == m {
            return Err(GraphError::Syntax {
                line,
                message: format!("more than the {m} declared edges"),
            });
        }
        let [u, v] = parse_pair(line, l)?;
        edges.push(Edge::new(u, v));
    }
    if edges.len() != m {
        return Err(GraphError::Syntax {
            line: text.lines().count().max(1),
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: usize, l: &str) -> Result<[usize; 2], GraphError> {
    let mut it = l.split_whitespace();
    let mut next = |what: &str| -> Result<usize, GraphError> {
        let tok = it.next().ok_or_else(|| GraphError::Syntax {
            line,
            message: format!("missing {what}"),
        })?;
        tok.parse().map_err(|_| GraphError::Syntax {
            line,
            message: format!("invalid {what} {tok:?}"),
        })
    };
    let a = next("first integer")?;
    let b = next("second integer")?;
    if let Some(extra) = it.next() {
        return Err(GraphError::Syntax {
            line,
            message: format!("unexpected token {extra:?}"),
        });
    }
    Ok([a, b])
}

pub fn serialize(g: &Graph) -> String {
    let mut out = String::with_capacity(8 + 6 * g.m());
    let _ = writeln!(out, "{} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u, e.v);
    }
    out
}
