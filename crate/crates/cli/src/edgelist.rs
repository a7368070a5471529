//! Plain-text edge lists.
//!
//! ```text
//! # comments and blank lines are allowed on read
//! 4 3
//! 0 1
//! 1 2
//! 2 3
//! ```
//!
//! The first record is `n m`, followed by exactly `m` records `u v` with
//! 0-based ids. Writers emit `u < v`, sorted lexicographically, LF endings
//! and no comments, so equal graphs give identical bytes.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::path::Path;

use gamma_core::Graph;

use crate::error::CliError;

/// Largest vertex count the reader accepts.
pub const MAX_VERTICES: usize = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn two_fields(line: usize, record: &str) -> Result<(&str, &str), ParseError> {
    let mut it = record.split_whitespace();
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a, b)),
        _ => Err(ParseError::new(line, format!("expected two integers, found {record:?}"))),
    }
}

fn integer(line: usize, field: &str, what: &str) -> Result<i128, ParseError> {
    field.parse().map_err(|_| ParseError::new(line, format!("{what} {field:?} is not an integer")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut recs = records(text);
    let Some((line, header)) = recs.next() else {
        return Err(ParseError::new(text.lines().count().max(1), "missing \"n m\" header"));
    };
    let (n, m) = two_fields(line, header)?;
    let (n, m) = (integer(line, n, "vertex count")?, integer(line, m, "edge count")?);
    if n < 1 {
        return Err(ParseError::new(line, format!("vertex count must be at least 1, got {n}")));
    }
    if n > MAX_VERTICES as i128 {
        return Err(ParseError::new(line, format!("vertex count {n} exceeds the supported maximum {MAX_VERTICES}")));
    }
    let n = n as usize;
    let max_m = n as i128 * (n as i128 - 1) / 2;
    if !(0..=max_m).contains(&m) {
        return Err(ParseError::new(line, format!("edge count must be between 0 and {max_m}, got {m}")));
    }
    let m = m as usize;

    let mut edges = Vec::with_capacity(m.min(1 << 20));
    let mut seen = HashSet::with_capacity(m.min(1 << 20));
    let mut last_line = line;
    for (line, record) in recs {
        last_line = line;
        if edges.len() == m {
            return Err(ParseError::new(line, format!("more than the {m} edges declared in the header")));
        }
        let (u, v) = two_fields(line, record)?;
        let (u, v) = (integer(line, u, "vertex")?, integer(line, v, "vertex")?);
        for id in [u, v] {
            if !(0..n as i128).contains(&id) {
                return Err(ParseError::new(line, format!("vertex {id} out of range 0..{n}")));
            }
        }
        let (u, v) = (u as usize, v as usize);
        if u == v {
            return Err(ParseError::new(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::new(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(ParseError::new(last_line, format!("header declares {m} edges but {} were found", edges.len())));
    }
    Graph::from_edges(n, edges).map_err(|e| ParseError::new(last_line, e.to_string()))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(16 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_graph(path: &Path) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    parse_edge_list(&text).map_err(|e| CliError::Parse {
        path: path.display().to_string(),
        line: e.line,
        message: e.message,
    })
}

pub fn write_graph(g: &Graph, path: &Path) -> Result<(), CliError> {
    std::fs::write(path, write_edge_list(g)).map_err(|source| CliError::Write { path: path.into(), source })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn err(text: &str) -> ParseError {
        parse_edge_list(text).unwrap_err()
    }

    #[test]
    fn reads_comments_and_any_edge_order() {
        let g = parse_edge_list("# P_3\n\n3 2\n  # middle\n2 1\n0 1\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), [(0, 1), (1, 2)]);
        assert_eq!(write_edge_list(&g), "3 2\n0 1\n1 2\n");
    }

    #[test]
    fn isolated_vertices_and_crlf() {
        let g = parse_edge_list("5 1\r\n3 4\r\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 1));
        assert_eq!(write_edge_list(&parse_edge_list("1 0\n").unwrap()), "1 0\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(err(""), ParseError::new(1, "missing \"n m\" header"));
        assert_eq!(err("# only\n").line, 1);
        assert_eq!(err("3\n").line, 1);
        assert_eq!(err("0 0\n").line, 1);
        assert_eq!(err("3 4\n").line, 1);
        assert_eq!(err("3 x\n").line, 1);
        assert_eq!(err("3 2\n0 1\n1 -1\n"), ParseError::new(3, "vertex -1 out of range 0..3"));
        assert_eq!(err("3 2\n0 1\n1 3\n").line, 3);
        assert_eq!(err("3 2\n0 1\n# c\n1 1\n"), ParseError::new(4, "self-loop at vertex 1"));
        assert_eq!(err("3 2\n0 1\n1 0\n"), ParseError::new(3, "duplicate edge 1 0"));
        assert_eq!(err("3 1\n0 1\n1 2\n").line, 3);
        assert_eq!(err("3 2\n0 1\n").line, 2);
        assert_eq!(err("3 2\n0 1 2\n").line, 2);
        assert_eq!(err("3 1\n0 1.5\n").line, 2);
        assert_eq!(err("99999999999999999999999999999999999999999 0\n").line, 1);
        assert_eq!(err("100000000000 0\n").line, 1);
    }
}
