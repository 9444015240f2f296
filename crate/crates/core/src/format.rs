//! Line-oriented text format:
//!
//! ```text
//! # comment
//! p 4
//! e 0 1
//! c 2 white
//! b 0 left
//! ```
//!
//! Vertices are `0..n`. Colors default to black; sides are optional.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Bipartition, Color, Coloring, Graph, Side, Vertex};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: Graph,
    /// Present iff the file had at least one `c` line.
    pub coloring: Option<Coloring>,
    /// Present iff the file had at least one `b` line.
    pub bipartition: Option<Bipartition>,
}

impl GraphFile {
    pub fn new(graph: Graph) -> Self {
        GraphFile {
            graph,
            ..Default::default()
        }
    }
}

fn parse_err<T>(line: usize, message: impl Into<String>) -> Result<T> {
    Err(Error::Parse {
        line,
        message: message.into(),
    })
}

pub fn parse(text: &str) -> Result<GraphFile> {
    let mut file: Option<GraphFile> = None;
    let mut n = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&kind, args)) = tokens.split_first() else {
            continue;
        };
        if kind == "p" {
            if file.is_some() {
                return parse_err(line, "duplicate p record");
            }
            let [count] = args else {
                return parse_err(line, "expected `p <n>`");
            };
            n = count
                .parse()
                .or_else(|_| parse_err(line, format!("bad vertex count {count:?}")))?;
            if n > u32::MAX as usize {
                return parse_err(line, "vertex count too large");
            }
            file = Some(GraphFile::new(Graph::with_vertices(n)));
            continue;
        }
        let Some(f) = file.as_mut() else {
            return parse_err(line, format!("`{kind}` record before `p`"));
        };
        let vertex = |tok: &str| -> Result<Vertex> {
            let v: usize = tok
                .parse()
                .or_else(|_| parse_err(line, format!("bad vertex id {tok:?}")))?;
            if v >= n {
                return parse_err(line, format!("vertex {v} out of range 0..{n}"));
            }
            Ok(v as Vertex)
        };
        match (kind, args) {
            ("e", [a, b]) => {
                let (u, v) = (vertex(a)?, vertex(b)?);
                if u == v {
                    return parse_err(line, format!("self-loop on {u}"));
                }
                if f.graph.has_edge(u, v) {
                    return parse_err(line, format!("duplicate edge {u}-{v}"));
                }
                f.graph.add_edge(u, v)?;
            }
            ("c", [a, color]) => {
                let v = vertex(a)?;
                let color = match *color {
                    "black" => Color::Black,
                    "white" => Color::White,
                    other => return parse_err(line, format!("bad color {other:?}")),
                };
                f.coloring
                    .get_or_insert_with(Coloring::all_black)
                    .set(v, color);
            }
            ("b", [a, side]) => {
                let v = vertex(a)?;
                let side = match *side {
                    "left" => Side::Left,
                    "right" => Side::Right,
                    other => return parse_err(line, format!("bad side {other:?}")),
                };
                f.bipartition
                    .get_or_insert_with(Bipartition::default)
                    .set(v, side);
            }
            ("e" | "c" | "b", _) => {
                return parse_err(line, format!("wrong number of fields for `{kind}`"));
            }
            _ => return parse_err(line, format!("unknown record `{kind}`")),
        }
    }
    let line = text.lines().count() + 1;
    file.map_or_else(|| parse_err(line, "missing `p` record"), Ok)
}

pub fn read_file(path: &Path) -> Result<GraphFile> {
    parse(&std::fs::read_to_string(path)?)
}

/// Canonical text: vertices are relabeled `0..n` in id order, then `p`,
/// sorted edges, colors and sides (for every vertex) follow.
pub fn serialize(g: &Graph, coloring: Option<&Coloring>, parts: Option<&Bipartition>) -> String {
    let (compact, old) = g.compact();
    let mut out = String::new();
    writeln!(out, "p {}", compact.vertex_count()).expect("string write");
    for (u, v) in compact.edges() {
        writeln!(out, "e {u} {v}").expect("string write");
    }
    if let Some(col) = coloring {
        for (new, &v) in old.iter().enumerate() {
            let name = match col.color(v) {
                Color::Black => "black",
                Color::White => "white",
            };
            writeln!(out, "c {new} {name}").expect("string write");
        }
    }
    if let Some(parts) = parts {
        for (new, &v) in old.iter().enumerate() {
            let name = match parts.side(v) {
                Side::Left => "left",
                Side::Right => "right",
            };
            writeln!(out, "b {new} {name}").expect("string write");
        }
    }
    out
}

pub fn serialize_file(f: &GraphFile) -> String {
    serialize(&f.graph, f.coloring.as_ref(), f.bipartition.as_ref())
}
