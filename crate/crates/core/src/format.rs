//! Text formats.
//!
//! Signed graphs (`.sg`), vertices 1-indexed:
//!
//! ```text
//! c optional comment lines
//! p signed <vertices> <edges>
//! e <u> <v> <+|->
//! ```
//!
//! Colorings (`.col`), one record per incidence, ordered by edge and then
//! by the lower-numbered endpoint:
//!
//! ```text
//! p col <n> <edges>
//! i <vertex> <u> <v> <color>
//! ```

use std::collections::HashSet;
use std::fmt::Write;

use crate::graph::{Graph, Incidence, IncidenceColoring, Sign, Signature, SignedGraph};
use crate::{Error, Result};

/// A parsed `.sg` file: the graph and its comment lines (without the `c `).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedGraphFile {
    pub graph: SignedGraph,
    pub comments: Vec<String>,
}

struct Tokens<'a> {
    line: usize,
    items: Vec<(usize, &'a str)>,
}

fn tokenize(line_no: usize, line: &str) -> Tokens<'_> {
    let mut items = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                items.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        items.push((s + 1, &line[s..]));
    }
    Tokens { line: line_no, items }
}

impl Tokens<'_> {
    fn err(&self, column: usize, message: impl Into<String>) -> Error {
        Error::Syntax {
            line: self.line,
            column,
            message: message.into(),
        }
    }

    fn expect_len(&self, n: usize, what: &str) -> Result<()> {
        if self.items.len() != n {
            let col = self.items.get(n).map_or(1, |t| t.0);
            return Err(self.err(col, format!("expected {what}")));
        }
        Ok(())
    }

    fn number<T: std::str::FromStr>(&self, i: usize) -> Result<T> {
        let (col, tok) = self.items[i];
        tok.parse()
            .map_err(|_| self.err(col, format!("expected a non-negative integer, got {tok:?}")))
    }

    fn int(&self, i: usize) -> Result<i32> {
        let (col, tok) = self.items[i];
        tok.parse()
            .map_err(|_| self.err(col, format!("expected an integer, got {tok:?}")))
    }

    fn vertex(&self, i: usize, count: usize) -> Result<usize> {
        let v: usize = self.number(i)?;
        if v == 0 || v > count {
            return Err(self.err(self.items[i].0, format!("vertex {v} not in 1..={count}")));
        }
        Ok(v - 1)
    }
}

fn comment(line: &str) -> Option<String> {
    let rest = line.strip_prefix('c')?;
    if rest.is_empty() {
        return Some(String::new());
    }
    rest.strip_prefix([' ', '\t']).map(|r| r.trim_end().to_string())
}

pub fn parse_signed_graph(text: &str) -> Result<SignedGraphFile> {
    let mut comments = Vec::new();
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut signs = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(c) = comment(line) {
            comments.push(c);
            continue;
        }
        let t = tokenize(line_no, line);
        match t.items[0].1 {
            "p" => {
                if header.is_some() {
                    return Err(t.err(1, "second problem line"));
                }
                t.expect_len(4, "p signed <vertices> <edges>")?;
                if t.items[1].1 != "signed" {
                    return Err(t.err(t.items[1].0, "expected format name \"signed\""));
                }
                let n: usize = t.number(2)?;
                if n == 0 {
                    return Err(t.err(t.items[2].0, "vertex count must be positive"));
                }
                header = Some((n, t.number(3)?));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(Error::HeaderMismatch(format!("edge at line {line_no} before the problem line")));
                };
                t.expect_len(4, "e <u> <v> <+|->")?;
                let (u, v) = (t.vertex(1, n)?, t.vertex(2, n)?);
                if u == v {
                    return Err(t.err(t.items[2].0, format!("self-loop at vertex {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(t.err(t.items[1].0, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                let sign = match t.items[3].1 {
                    "+" | "+1" => Sign::Positive,
                    "-" | "-1" => Sign::Negative,
                    other => {
                        return Err(Error::BadSign {
                            line: line_no,
                            token: other.to_string(),
                        })
                    }
                };
                edges.push((u, v));
                signs.push(sign);
            }
            other => return Err(t.err(1, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::HeaderMismatch("missing problem line".into()))?;
    if edges.len() != m {
        return Err(Error::HeaderMismatch(format!("header declares {m} edges, found {}", edges.len())));
    }
    let graph = SignedGraph::new(Graph::new(n, edges)?, Signature::new(signs))?;
    Ok(SignedGraphFile { graph, comments })
}

pub fn serialize_signed_graph(sg: &SignedGraph, comments: &[String]) -> String {
    let g = sg.graph();
    let mut out = String::new();
    for c in comments {
        if c.is_empty() {
            out.push_str("c\n");
        } else {
            let _ = writeln!(out, "c {c}");
        }
    }
    let _ = writeln!(out, "p signed {} {}", g.vertex_count(), g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "e {} {} {}", u + 1, v + 1, sg.sign(e));
    }
    out
}

/// Canonical form of a `.sg` text: comments first, single spaces, `+`/`-` signs.
pub fn normalize_signed_graph(text: &str) -> Result<String> {
    let f = parse_signed_graph(text)?;
    Ok(serialize_signed_graph(&f.graph, &f.comments))
}

pub fn serialize_coloring(g: &Graph, c: &IncidenceColoring) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p col {} {}", c.n(), c.edge_count());
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        let colors = c.edge_colors(e);
        let (first, second) = if a < b { ([a, b], [0, 1]) } else { ([b, a], [1, 0]) };
        for (vertex, slot) in first.into_iter().zip(second) {
            let _ = writeln!(out, "i {} {} {} {}", vertex + 1, a + 1, b + 1, colors[slot]);
        }
    }
    out
}

/// Reads a `.col` text against the graph it colors.
pub fn parse_coloring(text: &str, g: &Graph) -> Result<IncidenceColoring> {
    let mut header: Option<(usize, usize)> = None;
    let mut records = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || comment(line).is_some() {
            continue;
        }
        let t = tokenize(line_no, line);
        match t.items[0].1 {
            "p" => {
                if header.is_some() {
                    return Err(t.err(1, "second problem line"));
                }
                t.expect_len(4, "p col <n> <edges>")?;
                if t.items[1].1 != "col" {
                    return Err(t.err(t.items[1].0, "expected format name \"col\""));
                }
                let n: usize = t.number(2)?;
                if n == 0 {
                    return Err(t.err(t.items[2].0, "color count must be positive"));
                }
                let m: usize = t.number(3)?;
                if m != g.edge_count() {
                    return Err(Error::HeaderMismatch(format!(
                        "coloring declares {m} edges, graph has {}",
                        g.edge_count()
                    )));
                }
                header = Some((n, m));
            }
            "i" => {
                if header.is_none() {
                    return Err(Error::HeaderMismatch(format!("record at line {line_no} before the problem line")));
                }
                t.expect_len(5, "i <vertex> <u> <v> <color>")?;
                let count = g.vertex_count();
                let (x, u, v) = (t.vertex(1, count)?, t.vertex(2, count)?, t.vertex(3, count)?);
                let edge = g
                    .edge_between(u, v)
                    .ok_or_else(|| t.err(t.items[2].0, format!("no edge {} {}", u + 1, v + 1)))?;
                if x != u && x != v {
                    return Err(t.err(t.items[1].0, format!("vertex {} is not an endpoint", x + 1)));
                }
                records.push((Incidence { vertex: x, edge }, t.int(4)?));
            }
            other => return Err(t.err(1, format!("unknown line type {other:?}"))),
        }
    }
    let (n, m) = header.ok_or_else(|| Error::HeaderMismatch("missing problem line".into()))?;
    if records.len() != 2 * m {
        return Err(Error::HeaderMismatch(format!(
            "expected {} incidence records, found {}",
            2 * m,
            records.len()
        )));
    }
    IncidenceColoring::from_incidences(g, n, records)
}
