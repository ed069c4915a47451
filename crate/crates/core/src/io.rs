//! Text and JSON graph formats.
//!
//! Text format:
//!
//! ```text
//! # optional comments
//! a 2
//! x0 y0
//! y0 x1
//! ```
//!
//! The first content line declares the class size; every further content
//! line is one arc written with `x<i>`/`y<i>` labels. `#` starts a comment,
//! blank lines are ignored and duplicate arcs are rejected. The JSON mirror
//! is `{"a": 2, "arcs": [["x0", "y0"], ["y0", "x1"]]}`.

use serde::{Deserialize, Serialize};

use crate::digraph::BipartiteDigraph;
use crate::error::{Error, Result};

/// Label of vertex `v` in a graph with class size `a`.
pub fn vertex_label(a: usize, v: usize) -> String {
    if v < a {
        format!("x{v}")
    } else {
        format!("y{}", v - a)
    }
}

/// Inverse of [`vertex_label`].
pub fn parse_label(a: usize, label: &str) -> Option<usize> {
    let (class, index) = label.split_at_checked(1)?;
    if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let index: usize = index.parse().ok()?;
    if index >= a {
        return None;
    }
    match class {
        "x" => Some(index),
        "y" => Some(a + index),
        _ => None,
    }
}

/// Writes the canonical text form: header then arcs in ascending order.
pub fn to_text(graph: &BipartiteDigraph) -> String {
    let a = graph.class_size();
    let mut out = format!("a {a}\n");
    for (u, v) in graph.arcs() {
        out.push_str(&vertex_label(a, u));
        out.push(' ');
        out.push_str(&vertex_label(a, v));
        out.push('\n');
    }
    out
}

pub fn parse_text(input: &str) -> Result<BipartiteDigraph> {
    let mut graph: Option<BipartiteDigraph> = None;
    for (index, raw) in input.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let fields: Vec<&str> = content.split_whitespace().collect();
        let err = |message: String| Error::Parse { line, message };
        let Some(current) = graph.as_ref() else {
            if fields.len() != 2 || fields[0] != "a" {
                return Err(err(format!("expected header `a <int>`, found `{content}`")));
            }
            let a: usize = fields[1]
                .parse()
                .map_err(|_| err(format!("invalid class size `{}`", fields[1])))?;
            graph = Some(BipartiteDigraph::empty(a).map_err(|e| err(e.to_string()))?);
            continue;
        };
        if fields.len() != 2 {
            return Err(err(format!("expected `<src> <dst>`, found `{content}`")));
        }
        let a = current.class_size();
        let label = |s: &str| parse_label(a, s).ok_or_else(|| err(format!("unknown vertex label `{s}`")));
        let (u, v) = (label(fields[0])?, label(fields[1])?);
        let next = current.with_arc(u, v).map_err(|e| match e {
            Error::SameClassArc(..) => err(format!("arc {} {} joins one colour class", fields[0], fields[1])),
            Error::DuplicateArc(..) => err(format!("duplicate arc {} {}", fields[0], fields[1])),
            other => err(other.to_string()),
        })?;
        graph = Some(next);
    }
    graph.ok_or(Error::Parse {
        line: input.lines().count().max(1),
        message: "missing header `a <int>`".into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub a: usize,
    pub arcs: Vec<[String; 2]>,
}

impl From<&BipartiteDigraph> for GraphJson {
    fn from(graph: &BipartiteDigraph) -> Self {
        let a = graph.class_size();
        GraphJson {
            a,
            arcs: graph
                .arcs()
                .map(|(u, v)| [vertex_label(a, u), vertex_label(a, v)])
                .collect(),
        }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<BipartiteDigraph> {
        let mut arcs = Vec::with_capacity(self.arcs.len());
        for [src, dst] in &self.arcs {
            let u = parse_label(self.a, src).ok_or_else(|| Error::Json(format!("unknown vertex label `{src}`")))?;
            let v = parse_label(self.a, dst).ok_or_else(|| Error::Json(format!("unknown vertex label `{dst}`")))?;
            arcs.push((u, v));
        }
        BipartiteDigraph::new(self.a, arcs)
    }
}

pub fn to_json(graph: &BipartiteDigraph) -> String {
    serde_json::to_string(&GraphJson::from(graph)).expect("graph JSON serializes")
}

pub fn parse_json(input: &str) -> Result<BipartiteDigraph> {
    let doc: GraphJson = serde_json::from_str(input).map_err(|e| Error::Json(e.to_string()))?;
    doc.to_graph()
}

/// Parses either format, choosing JSON when the first non-blank character is `{`.
pub fn parse_any(input: &str) -> Result<BipartiteDigraph> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}
