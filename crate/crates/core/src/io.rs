//! `.hg` text format and its JSON equivalent.
//!
//! ```text
//! # optional comment lines
//! k n m
//! v v v      (m lines, ascending 0-based ids)
//! ```
//!
//! `k = 0` marks a non-uniform hypergraph whose edge lines may differ in
//! length. A trailing newline is required. Several records may share one file
//! when separated by a blank line.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphRecord {
    pub k: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for HypergraphRecord {
    fn from(h: &Hypergraph) -> Self {
        HypergraphRecord {
            k: h.uniformity().unwrap_or(0),
            n: h.vertex_count(),
            edges: h.edges().to_vec(),
        }
    }
}

impl From<Hypergraph> for HypergraphRecord {
    fn from(h: Hypergraph) -> Self {
        HypergraphRecord::from(&h)
    }
}

impl TryFrom<HypergraphRecord> for Hypergraph {
    type Error = Error;

    fn try_from(rec: HypergraphRecord) -> Result<Self> {
        if rec.k != 0 {
            if let Some(i) = rec.edges.iter().position(|e| e.len() != rec.k) {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("edge {i} does not have k={} vertices", rec.k),
                });
            }
        }
        Hypergraph::from_edges(rec.n, rec.edges)
    }
}

pub fn to_hg(h: &Hypergraph) -> String {
    let mut out = format!(
        "{} {} {}\n",
        h.uniformity().unwrap_or(0),
        h.vertex_count(),
        h.edge_count()
    );
    for e in h.edges() {
        let line: Vec<String> = e.iter().map(ToString::to_string).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
    out
}

/// Multi-record form: records separated by one blank line.
pub fn to_hg_multi<'a>(hs: impl IntoIterator<Item = &'a Hypergraph>) -> String {
    hs.into_iter().map(to_hg).collect::<Vec<_>>().join("\n")
}

pub fn to_json(h: &Hypergraph) -> String {
    serde_json::to_string(h).expect("record serializes")
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| parse_err(line, format!("invalid integer {tok:?}")))
        })
        .collect()
}

/// Parses every record of a `.hg` document.
pub fn parse_hg_multi(text: &str) -> Result<Vec<Hypergraph>> {
    if !text.is_empty() && !text.ends_with('\n') {
        let last = text.lines().count();
        return Err(parse_err(last, "missing trailing newline"));
    }
    let mut records = Vec::new();
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).peekable();
    loop {
        // skip separators and comments up to the next header
        while let Some(&(_, l)) = lines.peek() {
            if l.is_empty() || l.starts_with('#') {
                lines.next();
            } else {
                break;
            }
        }
        let Some((header_line, header)) = lines.next() else { break };
        let fields = parse_numbers(header_line, header)?;
        let [k, n, m] = fields[..] else {
            return Err(parse_err(header_line, "header must be `k n m`"));
        };
        let mut edges = Vec::with_capacity(m);
        while edges.len() < m {
            let Some((line_no, l)) = lines.next() else {
                return Err(parse_err(header_line, format!("expected {m} edge lines")));
            };
            if l.starts_with('#') {
                continue;
            }
            if l.is_empty() {
                return Err(parse_err(line_no, format!("expected {m} edge lines")));
            }
            let edge = parse_numbers(line_no, l)?;
            if k != 0 && edge.len() != k {
                return Err(parse_err(line_no, format!("edge has {} vertices, k={k}", edge.len())));
            }
            if edge.windows(2).any(|w| w[0] >= w[1]) {
                return Err(parse_err(line_no, "edge ids must be strictly ascending"));
            }
            edges.push(edge);
        }
        records.push(Hypergraph::from_edges(n, edges).map_err(|e| match e {
            Error::Parse { .. } => e,
            other => parse_err(header_line, other.to_string()),
        })?);
    }
    Ok(records)
}

/// Parses a document holding exactly one record.
pub fn parse_hg(text: &str) -> Result<Hypergraph> {
    let mut records = parse_hg_multi(text)?;
    match records.len() {
        1 => Ok(records.pop().unwrap()),
        c => Err(parse_err(0, format!("expected one record, found {c}"))),
    }
}

pub fn parse_json(text: &str) -> Result<Hypergraph> {
    let rec: HypergraphRecord =
        serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    Hypergraph::try_from(rec)
}

/// Accepts either format, telling them apart by the first significant byte.
pub fn parse_any(text: &str) -> Result<Hypergraph> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_hg(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_text() {
        let h = Hypergraph::from_edges(7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![2, 3, 5], vec![4, 5, 6]])
            .unwrap();
        let text = to_hg(&h);
        assert_eq!(text, "3 7 4\n0 1 2\n0 3 4\n2 3 5\n4 5 6\n");
        assert_eq!(parse_hg(&text), Ok(h.clone()));
        assert_eq!(parse_any(&to_json(&h)), Ok(h));
    }

    #[test]
    fn comments_and_mixed_sizes() {
        let text = "# a comment\n0 4 2\n0 1\n# inner\n1 2 3\n";
        let h = parse_hg(text).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.uniformity(), None);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(parse_hg("3 3 1\n0 1 2"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hg("3 3 1\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hg("3 3 1\n0 2 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hg("3 3 1\n0 1 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hg("3 3\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_hg("3 3 2\n0 1 2\n"), Err(Error::Parse { .. })));
    }

    #[test]
    fn multi_record() {
        let a = Hypergraph::from_edges(3, vec![vec![0, 1, 2]]).unwrap();
        let b = Hypergraph::empty(1);
        let text = to_hg_multi([&a, &b]);
        assert_eq!(text, "3 3 1\n0 1 2\n\n0 1 0\n");
        assert_eq!(parse_hg_multi(&text), Ok(vec![a, b]));
    }
}
