//! Reading and writing graphs: graph6, DIMACS edge format, JSON
//! `{"n": .., "edges": [[u, v], ..]}`, and DOT output.

mod graph6;

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;

pub use graph6::{parse_graph6, write_graph6};

/// A malformed input; `offset` is a byte offset into the text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError { offset, message: message.into() }
    }

    fn shifted(self, by: usize) -> Self {
        ParseError { offset: self.offset + by, ..self }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Graph6,
    Dimacs,
    Json,
}

impl Format {
    /// Guesses the format from a file extension.
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()?.to_ascii_lowercase().as_str() {
            "g6" | "graph6" => Some(Format::Graph6),
            "dimacs" | "col" | "dim" => Some(Format::Dimacs),
            "json" => Some(Format::Json),
            _ => None,
        }
    }
}

/// Parses every graph in `text`: one per non-empty line for graph6, a
/// single graph for DIMACS, and an object or an array of objects for JSON.
pub fn read_graphs(text: &str, format: Format) -> Result<Vec<Graph>, ParseError> {
    match format {
        Format::Graph6 => {
            let mut out = Vec::new();
            let mut offset = 0;
            for line in text.split_inclusive('\n') {
                if !line.trim().is_empty() {
                    out.push(parse_graph6(line.trim_end()).map_err(|e| e.shifted(offset))?);
                }
                offset += line.len();
            }
            Ok(out)
        }
        Format::Dimacs => Ok(vec![parse_dimacs(text)?]),
        Format::Json => {
            let value: serde_json::Value = serde_json::from_str(text).map_err(|e| json_error(text, e))?;
            match value {
                serde_json::Value::Array(items) => items
                    .into_iter()
                    .map(|v| {
                        serde_json::from_value::<JsonGraph>(v).map_err(|e| ParseError::new(0, e.to_string()))?.build()
                    })
                    .collect(),
                v => Ok(vec![serde_json::from_value::<JsonGraph>(v)
                    .map_err(|e| ParseError::new(0, e.to_string()))?
                    .build()?]),
            }
        }
    }
}

/// Parses DIMACS edge format: `c` comment lines, one `p edge n m` line, and
/// `e u v` lines with 1-based vertices. Duplicate edges collapse.
pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let here = offset;
        offset += line.len();
        let mut it = line.split_whitespace();
        match it.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(ParseError::new(here, "second problem line"));
                }
                let kind = it.next();
                if !matches!(kind, Some("edge" | "edges" | "col")) {
                    return Err(ParseError::new(here, "expected `p edge <n> <m>`"));
                }
                let count = it.next().and_then(|s| s.parse().ok());
                let _m: Option<usize> = it.next().and_then(|s| s.parse().ok());
                n = Some(count.ok_or_else(|| ParseError::new(here, "missing vertex count"))?);
            }
            Some("e") => {
                let Some(nv) = n else {
                    return Err(ParseError::new(here, "edge before the problem line"));
                };
                let mut end = || -> Result<usize, ParseError> {
                    let v: usize = it
                        .next()
                        .and_then(|s| s.parse().ok())
                        .ok_or_else(|| ParseError::new(here, "malformed edge line"))?;
                    if v == 0 || v > nv {
                        return Err(ParseError::new(here, format!("vertex {v} outside 1..={nv}")));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (end()?, end()?);
                if u == v {
                    return Err(ParseError::new(here, format!("self-loop at {}", u + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(ParseError::new(here, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| ParseError::new(text.len(), "missing problem line"))?;
    Graph::new(n, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut s = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl JsonGraph {
    fn build(self) -> Result<Graph, ParseError> {
        Graph::new(self.n, self.edges).map_err(|e| ParseError::new(0, e.to_string()))
    }
}

fn json_error(text: &str, e: serde_json::Error) -> ParseError {
    // serde_json reports 1-based line and column
    let offset: usize = text.split_inclusive('\n').take(e.line().saturating_sub(1)).map(str::len).sum();
    ParseError::new(offset + e.column().saturating_sub(1), e.to_string())
}

pub fn parse_json(text: &str) -> Result<Graph, ParseError> {
    serde_json::from_str::<JsonGraph>(text).map_err(|e| json_error(text, e))?.build()
}

pub fn write_json(g: &Graph) -> String {
    serde_json::to_string(&JsonGraph { n: g.n(), edges: g.edges() }).expect("serializable")
}

/// The graph value as JSON, for embedding in reports.
pub fn graph_json(g: &Graph) -> serde_json::Value {
    serde_json::json!({ "n": g.n(), "edges": g.edges() })
}

const DOT_PALETTE: [&str; 4] = ["#e41a1c", "#377eb8", "#4daf4a", "#984ea3"];

/// Undirected DOT, with vertices filled by colour when a colouring is given.
pub fn write_dot(g: &Graph, coloring: Option<&Coloring>) -> String {
    let mut s = String::from("graph G {\n  node [shape=circle, style=filled, fillcolor=white];\n");
    for v in 0..g.n() {
        match coloring.map(|c| c.colors[v]) {
            Some(c) if c >= 1 => {
                let fill = DOT_PALETTE[(c as usize - 1) % DOT_PALETTE.len()];
                let _ = writeln!(s, "  {v} [label=\"{v}:{c}\", fillcolor=\"{fill}\"];");
            }
            _ => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {u} -- {v};");
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn dimacs() {
        let g = parse_dimacs("c pentagon\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 2 1\n").unwrap();
        assert_eq!(g, fixtures::c5());
        let e = parse_dimacs("p edge 5 1\ne 0 1\n").unwrap_err();
        assert_eq!(e.offset, 11);
        assert!(parse_dimacs("e 1 2\n").is_err());
        assert!(parse_dimacs("c nothing\n").is_err());
        assert_eq!(parse_dimacs(&write_dimacs(&fixtures::petersen())).unwrap(), fixtures::petersen());
    }

    #[test]
    fn json() {
        let g = parse_json(r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#).unwrap();
        assert_eq!(g, Graph::path(3).unwrap());
        assert_eq!(parse_json(&write_json(&fixtures::p1())).unwrap(), fixtures::p1());
        assert!(parse_json(r#"{"n": 2, "edges": [[0, 2]]}"#).is_err());
        let many = read_graphs(r#"[{"n":1,"edges":[]},{"n":2,"edges":[[0,1]]}]"#, Format::Json).unwrap();
        assert_eq!(many.len(), 2);
    }

    #[test]
    fn graph6_lines() {
        let text = format!("{}\n\n{}\n", write_graph6(&fixtures::c5()), write_graph6(&fixtures::c7()));
        assert_eq!(read_graphs(&text, Format::Graph6).unwrap(), vec![fixtures::c5(), fixtures::c7()]);
        let e = read_graphs("D??\nD?", Format::Graph6).unwrap_err();
        assert_eq!(e.offset, 6);
    }

    #[test]
    fn dot() {
        let c5 = fixtures::c5();
        let d = write_dot(&c5, Some(&Coloring::new(3, vec![1, 2, 1, 2, 3])));
        assert!(d.contains("0 -- 1;") && d.contains("4 [label=\"4:3\""));
        assert_eq!(Format::from_path(Path::new("x.g6")), Some(Format::Graph6));
    }
}
