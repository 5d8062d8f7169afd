//! Plain-text graph format.
//!
//! ```text
//! # comment lines start with '#'
//! 4
//! 0 1
//! 0 2
//! 1 2
//! 2 3
//! rotations
//! 0: 1 2
//! 1: 2 0
//! 2: 0 1 3
//! 3: 2
//! ```
//!
//! The first line is the vertex count; edge lines `u v` have `u < v` and
//! appear in strictly increasing lexicographic order. The optional
//! `rotations` section lists every vertex's neighbors in cyclic order and
//! must describe exactly the listed edge set. Problem files for the
//! precoloring engine prefix this with a `k=<int> t=<int>` line.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unexpected end of input: {0}")]
    Truncated(&'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, message: message.into() }
}

/// Numbered non-empty, non-comment lines.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn parse_uint(line: usize, token: &str) -> Result<usize, ParseError> {
    if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
        return Err(syntax(line, format!("expected a decimal integer, found {token:?}")));
    }
    token.parse().map_err(|_| syntax(line, format!("integer {token:?} out of range")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    parse_lines(&mut content_lines(text))
}

fn parse_lines<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>) -> Result<Graph, ParseError> {
    let (lno, first) = lines.next().ok_or(ParseError::Truncated("missing vertex count"))?;
    let n = parse_uint(lno, first)?;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut rotation_section = false;
    for (lno, line) in lines.by_ref() {
        if line == "rotations" {
            rotation_section = true;
            break;
        }
        let mut parts = line.split(' ');
        let (Some(a), Some(b), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(syntax(lno, "edge lines are 'u v' separated by a single space"));
        };
        let (u, v) = (parse_uint(lno, a)?, parse_uint(lno, b)?);
        if u >= v || v >= n {
            return Err(syntax(lno, format!("edge {u} {v} must satisfy u < v < {n}")));
        }
        if edges.last().is_some_and(|&last| last >= (u, v)) {
            return Err(syntax(lno, "edges must be strictly increasing in lexicographic order"));
        }
        edges.push((u, v));
    }
    if !rotation_section {
        return Ok(Graph::from_edges(n, &edges)?);
    }
    let mut rotations = Vec::with_capacity(n);
    for expected in 0..n {
        let (lno, line) = lines.next().ok_or(ParseError::Truncated("rotation lines"))?;
        let (head, rest) =
            line.split_once(':').ok_or_else(|| syntax(lno, "rotation lines look like 'v: a b c'"))?;
        if parse_uint(lno, head)? != expected {
            return Err(syntax(lno, format!("expected rotation for vertex {expected}")));
        }
        let list = rest
            .split(' ')
            .filter(|t| !t.is_empty())
            .map(|t| parse_uint(lno, t))
            .collect::<Result<Vec<_>, _>>()?;
        rotations.push(list);
    }
    if let Some((lno, _)) = lines.next() {
        return Err(syntax(lno, "trailing content after rotations"));
    }
    let graph = Graph::from_rotations(rotations)?;
    if graph.edges() != edges {
        return Err(syntax(lno, "rotation system does not match the edge list"));
    }
    Ok(graph)
}

pub fn format_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    if g.is_embedded() {
        out.push_str("rotations\n");
        for v in 0..g.n() {
            let _ = write!(out, "{v}:");
            for u in g.neighbors(v) {
                let _ = write!(out, " {u}");
            }
            out.push('\n');
        }
    }
    out
}

/// Header of a precoloring problem file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProblemHeader {
    pub k: usize,
    pub t: usize,
}

/// Parses `k=<int> t=<int>` followed by a graph.
pub fn parse_problem(text: &str) -> Result<(ProblemHeader, Graph), ParseError> {
    let mut lines = content_lines(text);
    let (lno, header) = lines.next().ok_or(ParseError::Truncated("missing k/t header"))?;
    let mut parts = header.split(' ');
    let (Some(k), Some(t), None) = (parts.next(), parts.next(), parts.next()) else {
        return Err(syntax(lno, "header is 'k=<int> t=<int>'"));
    };
    let k = k.strip_prefix("k=").ok_or_else(|| syntax(lno, "header must start with k="))?;
    let t = t.strip_prefix("t=").ok_or_else(|| syntax(lno, "second header field is t="))?;
    let header = ProblemHeader { k: parse_uint(lno, k)?, t: parse_uint(lno, t)? };
    let graph = parse_lines(&mut lines)?;
    Ok((header, graph))
}

pub fn format_problem(header: ProblemHeader, g: &Graph) -> String {
    format!("k={} t={}\n{}", header.k, header.t, format_graph(g))
}

#[cfg(test)]
mod tests {
    use super::super::families;
    use super::*;

    #[test]
    fn parses_plain_graph_with_comments() {
        let g = parse_graph("# path\n3\n0 1\n# middle\n1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert!(!g.is_embedded());
    }

    #[test]
    fn round_trips_embedded_graphs() {
        for g in [families::k4(), families::cube(), families::dodecahedron()] {
            let text = format_graph(&g);
            assert_eq!(parse_graph(&text).unwrap(), g);
            assert_eq!(format_graph(&parse_graph(&text).unwrap()), text);
        }
    }

    #[test]
    fn exact_output_bytes() {
        let g = Graph::from_edges(3, &[(1, 2), (0, 1)]).unwrap();
        assert_eq!(format_graph(&g), "3\n0 1\n1 2\n");
    }

    #[test]
    fn rejects_unsorted_or_malformed_edges() {
        assert!(parse_graph("3\n1 2\n0 1\n").is_err());
        assert!(parse_graph("3\n0 1\n0 1\n").is_err());
        assert!(parse_graph("3\n1 0\n").is_err());
        assert!(parse_graph("3\n0  1\n").is_err());
        assert!(parse_graph("3\n0 3\n").is_err());
        assert!(parse_graph("x\n").is_err());
        assert!(parse_graph("").is_err());
    }

    #[test]
    fn rejects_mismatched_rotations() {
        assert!(parse_graph("3\n0 1\n1 2\nrotations\n0: 1\n1: 0 2\n2: 1 0\n").is_err());
        assert!(parse_graph("2\n0 1\nrotations\n0: 1\n").is_err());
    }

    #[test]
    fn problem_header() {
        let (h, g) = parse_problem("k=4 t=3\n4\n0 3\n1 3\n2 3\n").unwrap();
        assert_eq!(h, ProblemHeader { k: 4, t: 3 });
        assert_eq!(g.n(), 4);
        assert_eq!(format_problem(h, &g), "k=4 t=3\n4\n0 3\n1 3\n2 3\n");
        assert!(parse_problem("t=3 k=4\n1\n").is_err());
    }
}
