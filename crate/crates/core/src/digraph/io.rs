//! Plain-text edge lists and DOT export.
//!
//! ```text
//! # directed 3-cycle
//! 3
//! 0 1
//! 1 2
//! 2 0
//! ```

use std::fmt::Write as _;

use super::Digraph;
use crate::error::{Error, Result};

/// Parses the edge-list format: the first content line is `n`, every other
/// content line is `u v`. `#` starts a comment.
pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| Error::parse(line_no, format!("expected a vertex id, got {s:?}")))
        };
        match (n, fields.as_slice()) {
            (None, [count]) => n = Some(num(count)?),
            (None, _) => return Err(Error::parse(line_no, "first line must be the vertex count")),
            (Some(_), [u, v]) => edges.push((num(u)?, num(v)?)),
            (Some(_), _) => return Err(Error::parse(line_no, "expected `u v`")),
        }
    }
    let n = n.ok_or_else(|| Error::parse(0, "missing vertex count"))?;
    Digraph::from_edges(n, edges)
}

pub fn write_digraph(d: &Digraph) -> String {
    let mut out = format!("{}\n", d.n());
    for (u, v) in d.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// DOT source; a bidirectional pair becomes a single `dir=both` edge.
pub fn to_dot(d: &Digraph) -> String {
    let mut out = String::from("digraph D {\n");
    for v in 0..d.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (u, v) in d.edges() {
        if d.has_edge(v, u) {
            if u < v {
                let _ = writeln!(out, "  {u} -> {v} [dir=both];");
            }
        } else {
            let _ = writeln!(out, "  {u} -> {v};");
        }
    }
    out.push_str("}\n");
    out
}
