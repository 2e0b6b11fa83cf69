//! Textual file formats: the grid-graph format (`glp`) and the group
//! certificate format embedding two graphs.

use crate::grid::{Edge, GraphError, GridGraph, Vertex};
use crate::monoid::GroupCertificate;
use std::collections::BTreeSet;
use std::fmt::Write as _;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {0}: expected header `glp 1 <width> <length>`")]
    BadHeader(usize),
    #[error("line {0}: unknown record tag {1:?}")]
    UnknownTag(usize, String),
    #[error("line {0}: malformed record")]
    BadRecord(usize),
    #[error("line {0}: duplicate {1} record")]
    Duplicate(usize, &'static str),
    #[error("certificate line {0}: expected {1}")]
    BadCertificate(usize, &'static str),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Canonical text form: header, `#` comments, vertices before edges, records
/// in sorted order.
pub fn serialize_graph(g: &GridGraph) -> String {
    serialize_graph_with_comments(g, &[])
}

pub fn serialize_graph_with_comments(g: &GridGraph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    writeln!(out, "glp 1 {} {}", g.width(), g.length()).unwrap();
    for v in g.vertices() {
        writeln!(out, "v {} {}", v.col, v.row).unwrap();
    }
    for e in g.edges() {
        let (a, b) = e.endpoints();
        writeln!(out, "e {} {} {} {}", a.col, a.row, b.col, b.row).unwrap();
    }
    out
}

fn parse_fields(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

fn parse_u32(s: &str, lineno: usize) -> Result<u32, FormatError> {
    s.parse().map_err(|_| FormatError::BadRecord(lineno))
}

/// Parses the grid-graph format; inverse of `serialize_graph` on canonical
/// text. Validation (coordinate ranges, layering, planarity) is delegated to
/// graph construction.
pub fn parse_graph(text: &str) -> Result<GridGraph, FormatError> {
    let mut header: Option<(u32, u32)> = None;
    let mut vertices: BTreeSet<Vertex> = BTreeSet::new();
    let mut edges: BTreeSet<Edge> = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let f = parse_fields(line);
        match f[0] {
            "glp" => {
                if header.is_some() {
                    return Err(FormatError::Duplicate(lineno, "header"));
                }
                if f.len() != 4 || f[1] != "1" {
                    return Err(FormatError::BadHeader(lineno));
                }
                header = Some((parse_u32(f[2], lineno)?, parse_u32(f[3], lineno)?));
            }
            "v" => {
                if f.len() != 3 {
                    return Err(FormatError::BadRecord(lineno));
                }
                let v = Vertex::new(parse_u32(f[1], lineno)?, parse_u32(f[2], lineno)?);
                if !vertices.insert(v) {
                    return Err(FormatError::Duplicate(lineno, "vertex"));
                }
            }
            "e" => {
                if f.len() != 5 {
                    return Err(FormatError::BadRecord(lineno));
                }
                let a = Vertex::new(parse_u32(f[1], lineno)?, parse_u32(f[2], lineno)?);
                let b = Vertex::new(parse_u32(f[3], lineno)?, parse_u32(f[4], lineno)?);
                if !edges.insert(Edge::new(a, b)) {
                    return Err(FormatError::Duplicate(lineno, "edge"));
                }
            }
            tag => return Err(FormatError::UnknownTag(lineno, tag.to_string())),
        }
    }
    let (width, length) = header.ok_or(FormatError::BadHeader(0))?;
    Ok(GridGraph::new(width, length, vertices, edges)?)
}

/// Certificate format: a `cert p=<p>` line, then `A` and `B` section marker
/// lines, each followed by a verbatim grid-graph block.
pub fn serialize_certificate(cert: &GroupCertificate) -> String {
    let mut out = String::new();
    writeln!(out, "cert p={}", cert.p).unwrap();
    writeln!(out, "A").unwrap();
    out.push_str(&serialize_graph(&cert.a));
    writeln!(out, "B").unwrap();
    out.push_str(&serialize_graph(&cert.b));
    out
}

/// Parses a certificate file. Invariants are not re-checked here; callers
/// run certificate verification separately.
pub fn parse_certificate(text: &str) -> Result<GroupCertificate, FormatError> {
    let mut lines = text.lines().enumerate().peekable();
    let skip_blank = |lines: &mut std::iter::Peekable<
        std::iter::Enumerate<std::str::Lines<'_>>,
    >| {
        while lines
            .peek()
            .is_some_and(|(_, l)| l.trim().is_empty() || l.trim_start().starts_with('#'))
        {
            lines.next();
        }
    };
    skip_blank(&mut lines);
    let (i, head) = lines
        .next()
        .ok_or(FormatError::BadCertificate(0, "cert p=<p>"))?;
    let p: u64 = head
        .trim()
        .strip_prefix("cert p=")
        .and_then(|s| s.parse().ok())
        .ok_or(FormatError::BadCertificate(i + 1, "cert p=<p>"))?;
    let mut section = |marker: &'static str| -> Result<String, FormatError> {
        skip_blank(&mut lines);
        let (i, m) = lines
            .next()
            .ok_or(FormatError::BadCertificate(usize::MAX, "section marker"))?;
        if m.trim() != marker {
            return Err(FormatError::BadCertificate(i + 1, "section marker"));
        }
        let mut body = String::new();
        while let Some(&(_, l)) = lines.peek() {
            let t = l.trim();
            if t == "A" || t == "B" {
                break;
            }
            body.push_str(l);
            body.push('\n');
            lines.next();
        }
        Ok(body)
    };
    let a = parse_graph(&section("A")?)?;
    let b = parse_graph(&section("B")?)?;
    Ok(GroupCertificate { a, b, p })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{make_block, BlockKind};
    use crate::reductions::parity_to_graph;

    #[test]
    fn serialize_b00_header() {
        let text = serialize_graph(&make_block(BlockKind::B00));
        assert!(text.starts_with("glp 1 6 2\n"));
    }

    #[test]
    fn round_trip_gadget_graph() {
        let g = parity_to_graph("1101").unwrap();
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text).unwrap(), g);
        assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn comments_and_blanks_ignored() {
        let g = parse_graph("# hello\nglp 1 1 2\n\nv 0 0  # inline\nv 1 0\ne 0 0 1 0\n").unwrap();
        assert_eq!(g.vertex_count(), 2);
    }

    #[test]
    fn rejects_unknown_tag_and_bad_records() {
        assert!(matches!(
            parse_graph("glp 1 1 1\nw 0 0\n"),
            Err(FormatError::UnknownTag(2, _))
        ));
        assert!(matches!(
            parse_graph("glp 2 1 1\n"),
            Err(FormatError::BadHeader(1))
        ));
        assert!(matches!(
            parse_graph("glp 1 1 1\nv 0\n"),
            Err(FormatError::BadRecord(2))
        ));
        assert!(matches!(
            parse_graph("glp 1 1 1\nv 0 0\nv 0 0\n"),
            Err(FormatError::Duplicate(3, "vertex"))
        ));
        assert!(parse_graph("v 0 0\n").is_err());
    }

    #[test]
    fn rejects_layering_violation() {
        // Edge spanning two columns.
        let r = parse_graph("glp 1 1 3\nv 0 0\nv 2 0\ne 0 0 2 0\n");
        assert!(matches!(r, Err(FormatError::Graph(_))));
    }

    #[test]
    fn rejects_out_of_range() {
        let r = parse_graph("glp 1 1 1\nv 5 0\n");
        assert!(matches!(r, Err(FormatError::Graph(_))));
    }

    #[test]
    fn certificate_round_trip() {
        let a = parity_to_graph("").unwrap();
        let cert = GroupCertificate {
            a: a.clone(),
            b: a,
            p: 3,
        };
        let text = serialize_certificate(&cert);
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(serialize_certificate(&back), text);
    }

    #[test]
    fn certificate_syntax_errors() {
        assert!(parse_certificate("").is_err());
        assert!(parse_certificate("cert p=x\n").is_err());
        assert!(parse_certificate("cert p=3\nB\nglp 1 1 1\n").is_err());
    }
}
