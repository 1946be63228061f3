//! Plain-text edge lists.
//!
//! ```text
//! # optional comment
//! p <n> <m>
//! <u> <v>      (m lines, 0 ≤ u, v < n, u ≠ v)
//! ```

use std::collections::BTreeSet;
use std::fmt::Write;

use thiserror::Error;

use super::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: expected header `p <n> <m>`")]
    MalformedHeader { line: usize },
    #[error("line {line}: expected an edge `<u> <v>`")]
    MalformedEdge { line: usize },
    #[error("line {line}: vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: usize },
    #[error("line {line}: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { line: usize, u: usize, v: usize },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },
}

fn parse_usize(tok: Option<&str>) -> Option<usize> {
    tok?.parse().ok()
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines
        .next()
        .ok_or(EdgeListError::MalformedHeader { line: 1 })?;
    let mut toks = header.split_whitespace();
    if toks.next() != Some("p") {
        return Err(EdgeListError::MalformedHeader { line });
    }
    let (n, m) = match (
        parse_usize(toks.next()),
        parse_usize(toks.next()),
        toks.next(),
    ) {
        (Some(n), Some(m), None) => (n, m),
        _ => return Err(EdgeListError::MalformedHeader { line }),
    };

    let mut edges = BTreeSet::new();
    for (line, content) in lines {
        let mut toks = content.split_whitespace();
        let (u, v) = match (
            parse_usize(toks.next()),
            parse_usize(toks.next()),
            toks.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(EdgeListError::MalformedEdge { line }),
        };
        for vertex in [u, v] {
            if vertex >= n {
                return Err(EdgeListError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(EdgeListError::SelfLoop { line, vertex: u });
        }
        let (u, v) = (u.min(v), u.max(v));
        if !edges.insert((u, v)) {
            return Err(EdgeListError::DuplicateEdge { line, u, v });
        }
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCountMismatch {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges).expect("edges validated while parsing"))
}

/// Header line, then one `u v` line per edge with `u < v`, sorted.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::friendship_graph;

    #[test]
    fn parses_triangle() {
        let g = parse_edge_list("p 3 3\n0 1\n1 2\n0 2").unwrap();
        assert_eq!(g, friendship_graph(1).unwrap());
    }

    #[test]
    fn serializes_sorted() {
        let text = serialize_edge_list(&friendship_graph(1).unwrap());
        assert_eq!(text, "p 3 3\n0 1\n0 2\n1 2\n");
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_edge_list("# triangle\n\np 3 3\n# edges\n2 1\n0 1\n\n0 2\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn self_loop_reports_line() {
        assert_eq!(
            parse_edge_list("p 2 1\n0 0"),
            Err(EdgeListError::SelfLoop { line: 2, vertex: 0 })
        );
    }

    #[test]
    fn each_error_is_distinct() {
        assert_eq!(
            parse_edge_list("q 2 1\n"),
            Err(EdgeListError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_edge_list(""),
            Err(EdgeListError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_edge_list("p 2\n"),
            Err(EdgeListError::MalformedHeader { line: 1 })
        );
        assert_eq!(
            parse_edge_list("p 3 1\n0 x\n"),
            Err(EdgeListError::MalformedEdge { line: 2 })
        );
        assert_eq!(
            parse_edge_list("p 3 1\n0 1 2\n"),
            Err(EdgeListError::MalformedEdge { line: 2 })
        );
        assert_eq!(
            parse_edge_list("p 3 1\n\n0 3\n"),
            Err(EdgeListError::VertexOutOfRange {
                line: 3,
                vertex: 3,
                n: 3
            })
        );
        assert_eq!(
            parse_edge_list("p 3 2\n0 1\n1 0\n"),
            Err(EdgeListError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            parse_edge_list("p 3 2\n0 1\n"),
            Err(EdgeListError::EdgeCountMismatch {
                declared: 2,
                found: 1
            })
        );
    }
}
