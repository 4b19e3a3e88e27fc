//! Plain-text graph formats.
//!
//! * edge list: header `n m`, then `m` lines `u v` with 0-based vertices;
//! * DIMACS: header `p edge n m`, then `m` lines `e u v` with 1-based vertices.
//!
//! Both accept comment lines starting with `c` (and `#` for edge lists) and
//! ignore blank lines.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    EdgeList,
    Dimacs,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" | "edge-list" => Ok(GraphFormat::EdgeList),
            "dimacs" => Ok(GraphFormat::Dimacs),
            _ => Err(Error::InvalidParameter(format!(
                "format `{s}` (expected edgelist or dimacs)"
            ))),
        }
    }
}

impl GraphFormat {
    /// Guess from the first meaningful line: DIMACS files start with `p`.
    pub fn detect(text: &str) -> GraphFormat {
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('c') && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with('p') => GraphFormat::Dimacs,
            _ => GraphFormat::EdgeList,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn number(token: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let token = token.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    token
        .parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{token}`")))
}

struct Builder {
    n: usize,
    m: usize,
    header_line: usize,
    edges: Vec<(Vertex, Vertex)>,
}

impl Builder {
    fn push(&mut self, line: usize, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(parse_err(
                    line,
                    format!("vertex {w} out of range for n = {}", self.n),
                ));
            }
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop on vertex {u}")));
        }
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(self, last_line: usize) -> Result<Graph> {
        if self.edges.len() != self.m {
            return Err(parse_err(
                last_line.max(self.header_line),
                format!(
                    "header declares {} edges, found {}",
                    self.m,
                    self.edges.len()
                ),
            ));
        }
        Graph::from_edges(self.n, self.edges)
    }
}

fn meaningful(text: &str, hash_comments: bool) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(move |(i, l)| {
        let l = l.trim();
        let skip = l.is_empty() || l.starts_with('c') || (hash_comments && l.starts_with('#'));
        (!skip).then_some((i + 1, l))
    })
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = meaningful(text, true);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header `n m`"))?;
    let mut tokens = header.split_whitespace();
    let n = number(tokens.next(), header_line, "vertex count")?;
    let m = number(tokens.next(), header_line, "edge count")?;
    if tokens.next().is_some() {
        return Err(parse_err(header_line, "header must be `n m`"));
    }
    let mut builder = Builder {
        n,
        m,
        header_line,
        edges: Vec::with_capacity(m),
    };
    let mut last = header_line;
    for (line, content) in lines {
        last = line;
        let mut tokens = content.split_whitespace();
        let u = number(tokens.next(), line, "vertex")?;
        let v = number(tokens.next(), line, "vertex")?;
        if tokens.next().is_some() {
            return Err(parse_err(line, "expected two vertices"));
        }
        builder.push(line, u, v)?;
    }
    builder.finish(last)
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut builder: Option<Builder> = None;
    let mut last = 1;
    for (line, content) in meaningful(text, false) {
        last = line;
        let mut tokens = content.split_whitespace();
        match tokens.next() {
            Some("p") => {
                if builder.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    other => {
                        return Err(parse_err(
                            line,
                            format!("expected `p edge`, found `p {}`", other.unwrap_or("")),
                        ))
                    }
                }
                let n = number(tokens.next(), line, "vertex count")?;
                let m = number(tokens.next(), line, "edge count")?;
                builder = Some(Builder {
                    n,
                    m,
                    header_line: line,
                    edges: Vec::with_capacity(m),
                });
            }
            Some("e") => {
                let b = builder
                    .as_mut()
                    .ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = number(tokens.next(), line, "vertex")?;
                let v = number(tokens.next(), line, "vertex")?;
                if u == 0 || v == 0 {
                    return Err(parse_err(line, "DIMACS vertices are 1-based"));
                }
                b.push(line, u - 1, v - 1)?;
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
            None => {}
        }
    }
    builder
        .ok_or_else(|| parse_err(last, "missing problem line `p edge n m`"))?
        .finish(last)
}

pub fn parse_str(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Dimacs => parse_dimacs(text),
    }
}

/// Reads a graph file; `format = None` detects the format from the content.
pub fn parse_graph(path: impl AsRef<Path>, format: Option<GraphFormat>) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_str(&text, format.unwrap_or_else(|| GraphFormat::detect(&text)))
}

pub fn write_graph(graph: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::EdgeList => {
            let _ = writeln!(out, "{} {}", graph.n(), graph.m());
            for (u, v) in graph.edges() {
                let _ = writeln!(out, "{u} {v}");
            }
        }
        GraphFormat::Dimacs => {
            let _ = writeln!(out, "p edge {} {}", graph.n(), graph.m());
            for (u, v) in graph.edges() {
                let _ = writeln!(out, "e {} {}", u + 1, v + 1);
            }
        }
    }
    out
}

/// Parses `1,2,3` or whitespace-separated vertex identifiers.
pub fn parse_vertex_list(text: &str) -> Result<Vec<Vertex>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse()
                .map_err(|_| Error::InvalidParameter(format!("invalid vertex `{t}`")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::path;

    #[test]
    fn edge_list_path() {
        assert_eq!(parse_edge_list("4 3\n0 1\n1 2\n2 3").unwrap(), path(4));
        assert_eq!(
            parse_edge_list("c a comment\n4 3\n\n# another\n0 1\n1 2\n2 3\n").unwrap(),
            path(4)
        );
    }

    #[test]
    fn dimacs_path() {
        assert_eq!(
            parse_dimacs("p edge 4 3\ne 1 2\ne 2 3\ne 3 4").unwrap(),
            path(4)
        );
        assert_eq!(
            parse_dimacs("c hello\np edge 4 3\ne 1 2\nc mid\ne 2 3\ne 3 4\n").unwrap(),
            path(4)
        );
    }

    #[test]
    fn out_of_range_reports_line() {
        match parse_edge_list("4 3\n0 5") {
            Err(Error::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("vertex 5 out of range"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_dimacs("p edge 3 1\ne 1 4") {
            Err(Error::Parse { line: 2, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(
            parse_edge_list("4 3\n0 1\n1 2"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("4 1\n0 x"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("4 1\n1 1"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_dimacs("e 1 2"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 2 1\ne 0 1"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_dimacs("p edge 2 1\nx 1 2"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn detects_format() {
        assert_eq!(GraphFormat::detect("c x\np edge 1 0"), GraphFormat::Dimacs);
        assert_eq!(GraphFormat::detect("1 0"), GraphFormat::EdgeList);
    }

    #[test]
    fn vertex_lists() {
        assert_eq!(parse_vertex_list("1,2, 3").unwrap(), vec![1, 2, 3]);
        assert_eq!(parse_vertex_list(" 4 5\n6 ").unwrap(), vec![4, 5, 6]);
        assert!(parse_vertex_list("1,a").is_err());
    }
}
