//! Text formats: subgroup files and Graphviz DOT export/import.
//!
//! Subgroup file:
//!
//! ```text
//! # comments start with '#'
//! rank 2
//! xy
//! x Y
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::words::{Basis, Word};

use super::graph::{CoreGraph, Edge};
use super::subgroup::Subgroup;

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
    .trim()
}

pub fn parse_subgroup(text: &str) -> Result<Subgroup> {
    let mut basis: Option<Basis> = None;
    let mut words = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = strip_comment(raw);
        if line.is_empty() {
            continue;
        }
        match basis {
            None => {
                let rank = line
                    .strip_prefix("rank")
                    .and_then(|r| r.trim().parse::<usize>().ok())
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: format!("expected 'rank N', got '{line}'"),
                    })?;
                basis = Some(Basis::new(rank).map_err(|e| Error::Parse {
                    line: line_no,
                    message: e.to_string(),
                })?);
            }
            Some(b) => {
                let w = Word::parse(b, line).map_err(|e| e.at_line(line_no))?;
                words.push(w);
            }
        }
    }
    let basis = basis.ok_or(Error::Parse {
        line: 0,
        message: "missing 'rank N' header".into(),
    })?;
    Subgroup::new(basis, words)
}

pub fn write_subgroup(h: &Subgroup) -> String {
    let mut s = format!("rank {}\n", h.rank());
    for g in h.generators() {
        let _ = writeln!(s, "{g}");
    }
    s
}

/// Writes a labeled multigraph in DOT syntax with edge labels `g1..gN`.
pub fn write_dot(
    name: &str,
    rank: usize,
    node_labels: &[String],
    edges: &[Edge],
    basepoint: Option<usize>,
) -> String {
    let mut s = format!("digraph {name} {{\n  generators={rank};\n");
    if let Some(b) = basepoint {
        let _ = writeln!(s, "  basepoint={b};");
    }
    for (v, label) in node_labels.iter().enumerate() {
        let shape = if Some(v) == basepoint {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(s, "  {v} [label=\"{label}\", shape={shape}];");
    }
    for e in edges {
        let _ = writeln!(
            s,
            "  {} -> {} [label=\"g{}\"];",
            e.source, e.target, e.label
        );
    }
    s.push_str("}\n");
    s
}

pub fn core_to_dot(c: &CoreGraph) -> String {
    let labels: Vec<String> = (0..c.num_vertices()).map(|v| v.to_string()).collect();
    write_dot("core", c.rank(), &labels, &c.edges(), c.basepoint())
}

/// Reads back a graph written by [`core_to_dot`].
pub fn core_from_dot(text: &str) -> Result<CoreGraph> {
    let mut rank = None;
    let mut basepoint = None;
    let mut num_vertices = 0usize;
    let mut edges = Vec::new();
    let bad = |line: usize, message: String| Error::Parse { line, message };
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim().trim_end_matches(';').trim();
        if line.is_empty() || line.starts_with("digraph") || line == "}" || line.starts_with("//") {
            continue;
        }
        if let Some(v) = line.strip_prefix("generators=") {
            rank = Some(
                v.parse::<usize>()
                    .map_err(|e| bad(line_no, e.to_string()))?,
            );
        } else if let Some(v) = line.strip_prefix("basepoint=") {
            basepoint = Some(
                v.parse::<usize>()
                    .map_err(|e| bad(line_no, e.to_string()))?,
            );
        } else if let Some((lhs, rhs)) = line.split_once("->") {
            let source: usize = lhs.trim().parse().map_err(|_| bad(line_no, line.into()))?;
            let (target, attrs) = rhs.split_once('[').unwrap_or((rhs, ""));
            let target: usize = target
                .trim()
                .parse()
                .map_err(|_| bad(line_no, line.into()))?;
            let label = attrs
                .split_once("label=\"g")
                .and_then(|(_, rest)| rest.split_once('"'))
                .and_then(|(n, _)| n.parse::<usize>().ok())
                .ok_or_else(|| bad(line_no, format!("edge without g-label: {line}")))?;
            num_vertices = num_vertices.max(source + 1).max(target + 1);
            edges.push(Edge {
                source,
                target,
                label,
            });
        } else {
            let id = line.split('[').next().unwrap_or("").trim();
            let v: usize = id
                .parse()
                .map_err(|_| bad(line_no, format!("unrecognized statement: {line}")))?;
            num_vertices = num_vertices.max(v + 1);
        }
    }
    let rank = rank.ok_or_else(|| bad(0, "missing generators=N".into()))?;
    CoreGraph::from_edges(rank, num_vertices, &edges, basepoint)
}
