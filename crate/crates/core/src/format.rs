//! Line-oriented graph and digraph documents, plus DOT export.
//!
//! Graph document:
//!
//! ```text
//! graph house
//! v a
//! v b
//! e a b
//! ```
//!
//! A bare whitespace edge list (`a b` per line, a lone label declares an
//! isolated vertex) is accepted too. Digraph documents use the header
//! `digraph <name>`, `v <label>`, `added <label>` for vertices added to
//! certify a competition number, and `arc <tail> <head>`. A token starting
//! with `#` comments out the rest of its line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::competition::CompetitionCertificate;
use crate::graph::{Digraph, Edge, Graph, VertexId, VertexSet};
use crate::holes::HoleSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError { line, column, message: message.into() }
}

/// `(line, [(column, token)])` for every line with at least one token.
fn tokenize(text: &str) -> Vec<(usize, Vec<(usize, &str)>)> {
    let mut lines = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let mut tokens = Vec::new();
        let mut start = None;
        for (i, ch) in raw.char_indices().chain([(raw.len(), ' ')]) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(i),
                (true, Some(s)) => {
                    tokens.push((s + 1, &raw[s..i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(cut) = tokens.iter().position(|(_, t)| t.starts_with('#')) {
            tokens.truncate(cut);
        }
        if !tokens.is_empty() {
            lines.push((n + 1, tokens));
        }
    }
    lines
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GraphDocument {
    pub name: String,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

/// Shared bookkeeping for vertex and pair declarations.
#[derive(Default)]
struct Declarations {
    vertices: Vec<VertexId>,
    seen: BTreeMap<String, usize>,
    pairs: BTreeMap<(String, String), usize>,
}

impl Declarations {
    fn vertex(&mut self, line: usize, col: usize, label: &str) -> Result<(), ParseError> {
        if let Some(first) = self.seen.insert(label.to_owned(), line) {
            return Err(err(line, col, format!("duplicate vertex {label} (first declared at line {first})")));
        }
        self.vertices.push(VertexId::from(label));
        Ok(())
    }

    fn pair(
        &mut self,
        line: usize,
        (ca, a): (usize, &str),
        (cb, b): (usize, &str),
        directed: bool,
        implicit_vertices: bool,
    ) -> Result<(), ParseError> {
        let what = if directed { "arc" } else { "edge" };
        if a == b {
            return Err(err(line, cb, format!("self-loop at {a}")));
        }
        for (c, x) in [(ca, a), (cb, b)] {
            if !self.seen.contains_key(x) {
                if implicit_vertices {
                    self.vertex(line, c, x)?;
                } else {
                    return Err(err(line, c, format!("unknown vertex {x}")));
                }
            }
        }
        let key = if directed || a < b { (a.to_owned(), b.to_owned()) } else { (b.to_owned(), a.to_owned()) };
        if let Some(first) = self.pairs.insert(key, line) {
            return Err(err(line, ca, format!("duplicate {what} {a} {b} (first at line {first})")));
        }
        Ok(())
    }
}

impl GraphDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let lines = tokenize(text);
        match lines.first() {
            Some((_, toks)) if toks[0].1 == "graph" => Self::parse_structured(&lines),
            _ => Self::parse_edge_list(&lines),
        }
    }

    fn parse_structured(lines: &[(usize, Vec<(usize, &str)>)]) -> Result<Self, ParseError> {
        let (header_line, header) = &lines[0];
        if header.len() > 2 {
            return Err(err(*header_line, header[2].0, "expected `graph <name>`"));
        }
        let name = header.get(1).map(|(_, t)| t.to_string()).unwrap_or_default();
        let mut decl = Declarations::default();
        let mut edges = Vec::new();
        for (line, toks) in &lines[1..] {
            match (toks[0].1, toks.len()) {
                ("v", 2) => decl.vertex(*line, toks[1].0, toks[1].1)?,
                ("e", 3) => {
                    decl.pair(*line, toks[1], toks[2], false, false)?;
                    edges.push((VertexId::from(toks[1].1), VertexId::from(toks[2].1)));
                }
                ("v", _) => return Err(err(*line, toks[0].0, "expected `v <label>`")),
                ("e", _) => return Err(err(*line, toks[0].0, "expected `e <a> <b>`")),
                (other, _) => return Err(err(*line, toks[0].0, format!("unknown directive `{other}`"))),
            }
        }
        Ok(GraphDocument { name, vertices: decl.vertices, edges })
    }

    fn parse_edge_list(lines: &[(usize, Vec<(usize, &str)>)]) -> Result<Self, ParseError> {
        let mut decl = Declarations::default();
        let mut edges = Vec::new();
        for (line, toks) in lines {
            match toks.len() {
                1 => {
                    if !decl.seen.contains_key(toks[0].1) {
                        decl.vertex(*line, toks[0].0, toks[0].1)?;
                    }
                }
                2 => {
                    decl.pair(*line, toks[0], toks[1], false, true)?;
                    edges.push((VertexId::from(toks[0].1), VertexId::from(toks[1].1)));
                }
                _ => return Err(err(*line, toks[2].0, "expected at most two labels per line")),
            }
        }
        Ok(GraphDocument { name: String::new(), vertices: decl.vertices, edges })
    }

    pub fn from_graph(name: &str, g: &Graph) -> Self {
        GraphDocument {
            name: name.to_owned(),
            vertices: g.vertices().cloned().collect(),
            edges: g.edges().map(|e| (e.a().clone(), e.b().clone())).collect(),
        }
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.vertices.iter().cloned(), self.edges.iter().cloned()).expect("validated while parsing")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.name.is_empty() {
            out.push_str("graph\n");
        } else {
            let _ = writeln!(out, "graph {}", self.name);
        }
        for v in &self.vertices {
            let _ = writeln!(out, "v {v}");
        }
        for (a, b) in &self.edges {
            let _ = writeln!(out, "e {a} {b}");
        }
        out
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    Ok(GraphDocument::parse(text)?.to_graph())
}

pub fn serialize_graph(g: &Graph, name: &str) -> String {
    GraphDocument::from_graph(name, g).to_text()
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DigraphDocument {
    pub name: String,
    pub vertices: Vec<VertexId>,
    pub added: Vec<VertexId>,
    pub arcs: Vec<(VertexId, VertexId)>,
}

impl DigraphDocument {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let lines = tokenize(text);
        let Some((header_line, header)) = lines.first() else {
            return Err(err(1, 1, "empty document, expected `digraph <name>`"));
        };
        if header[0].1 != "digraph" || header.len() > 2 {
            return Err(err(*header_line, header[0].0, "expected `digraph <name>`"));
        }
        let name = header.get(1).map(|(_, t)| t.to_string()).unwrap_or_default();
        let mut decl = Declarations::default();
        let mut added = Vec::new();
        let mut arcs = Vec::new();
        for (line, toks) in &lines[1..] {
            match (toks[0].1, toks.len()) {
                ("v", 2) => decl.vertex(*line, toks[1].0, toks[1].1)?,
                ("added", 2) => {
                    decl.vertex(*line, toks[1].0, toks[1].1)?;
                    added.push(VertexId::from(toks[1].1));
                }
                ("arc", 3) => {
                    decl.pair(*line, toks[1], toks[2], true, false)?;
                    arcs.push((VertexId::from(toks[1].1), VertexId::from(toks[2].1)));
                }
                (d @ ("v" | "added" | "arc"), _) => {
                    return Err(err(*line, toks[0].0, format!("wrong number of fields for `{d}`")))
                }
                (other, _) => return Err(err(*line, toks[0].0, format!("unknown directive `{other}`"))),
            }
        }
        let vertices = decl.vertices.into_iter().filter(|v| !added.contains(v)).collect();
        Ok(DigraphDocument { name, vertices, added, arcs })
    }

    pub fn from_certificate(name: &str, cert: &CompetitionCertificate) -> Self {
        DigraphDocument {
            name: name.to_owned(),
            vertices: cert.base_vertices.iter().cloned().collect(),
            added: cert.added_vertices.clone(),
            arcs: cert.digraph.arcs().map(|(a, b)| (a.clone(), b.clone())).collect(),
        }
    }

    pub fn to_digraph(&self) -> Digraph {
        Digraph::new(self.vertices.iter().chain(&self.added).cloned(), self.arcs.iter().cloned())
            .expect("validated while parsing")
    }

    /// Reads the document as a certificate. When it marks no vertex as
    /// added, every vertex outside `graph_vertices` counts as added.
    pub fn to_certificate(&self, graph_vertices: &VertexSet) -> CompetitionCertificate {
        let digraph = self.to_digraph();
        let (base_vertices, added_vertices) = if self.added.is_empty() {
            let all: Vec<VertexId> = digraph.vertices().cloned().collect();
            let (base, added): (Vec<_>, Vec<_>) = all.into_iter().partition(|v| graph_vertices.contains(v));
            (base.into_iter().collect(), added)
        } else {
            (self.vertices.iter().cloned().collect(), self.added.clone())
        };
        CompetitionCertificate { digraph, base_vertices, added_vertices }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.name.is_empty() {
            out.push_str("digraph\n");
        } else {
            let _ = writeln!(out, "digraph {}", self.name);
        }
        for v in &self.vertices {
            let _ = writeln!(out, "v {v}");
        }
        for v in &self.added {
            let _ = writeln!(out, "added {v}");
        }
        for (a, b) in &self.arcs {
            let _ = writeln!(out, "arc {a} {b}");
        }
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// DOT rendering of `g` with hole edges drawn bold red and `marked`
/// vertices (e.g. a cut) filled.
pub fn graph_to_dot(g: &Graph, name: &str, holes: &HoleSet, marked: &VertexSet) -> String {
    let hole_edges: std::collections::BTreeSet<Edge> = holes.iter().flat_map(|h| h.edges()).collect();
    let mut out = String::new();
    let _ = writeln!(out, "graph {} {{", quote(name));
    for v in g.vertices() {
        if marked.contains(v) {
            let _ = writeln!(out, "  {} [style=filled, fillcolor=lightblue];", quote(v.as_str()));
        } else {
            let _ = writeln!(out, "  {};", quote(v.as_str()));
        }
    }
    for e in g.edges() {
        let style = if hole_edges.contains(&e) { " [color=red, penwidth=2]" } else { "" };
        let _ = writeln!(out, "  {} -- {}{};", quote(e.a().as_str()), quote(e.b().as_str()), style);
    }
    out.push_str("}\n");
    out
}

/// DOT rendering of a certificate digraph with added vertices dashed.
pub fn certificate_to_dot(cert: &CompetitionCertificate, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph {} {{", quote(name));
    for v in cert.digraph.vertices() {
        if cert.added_vertices.contains(v) {
            let _ = writeln!(out, "  {} [style=dashed];", quote(v.as_str()));
        } else {
            let _ = writeln!(out, "  {};", quote(v.as_str()));
        }
    }
    for (a, b) in cert.digraph.arcs() {
        let _ = writeln!(out, "  {} -> {};", quote(a.as_str()), quote(b.as_str()));
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::build_bounded_digraph;

    #[test]
    fn edge_list() {
        let g = parse_graph("u v\nv a\na b\nb u").unwrap();
        let c4 = Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u")]).unwrap();
        assert_eq!(g, c4);
        let g = parse_graph("# comment\nx\nu v # trailing\n").unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 1));
    }

    #[test]
    fn errors_carry_positions() {
        assert_eq!(parse_graph("u u").unwrap_err(), err(1, 3, "self-loop at u"));
        let e = parse_graph("a b\nc d\nb a\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 1));
        assert!(e.message.contains("first at line 1"), "{e}");
        let e = parse_graph("graph g\nv a\ne a q\n").unwrap_err();
        assert_eq!((e.line, e.column, e.message.as_str()), (3, 5, "unknown vertex q"));
        let e = parse_graph("graph g\nv a\nx a\n").unwrap_err();
        assert_eq!((e.line, e.column), (3, 1));
        assert!(parse_graph("a b c").is_err());
        assert!(parse_graph("graph g\nv a\nv a\n").is_err());
    }

    #[test]
    fn structured_round_trip() {
        let house = Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u"), ("w", "u"), ("w", "v")]).unwrap();
        let text = serialize_graph(&house, "house");
        assert!(text.starts_with("graph house\nv a\n"));
        assert_eq!(parse_graph(&text).unwrap(), house);
        let doc = GraphDocument::parse(&text).unwrap();
        assert_eq!(doc.name, "house");
        assert_eq!(doc.to_text(), text);
    }

    #[test]
    fn digraph_documents() {
        let c4 = Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u")]).unwrap();
        let cert = build_bounded_digraph(&c4).unwrap();
        let doc = DigraphDocument::from_certificate("c4", &cert);
        let back = DigraphDocument::parse(&doc.to_text()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_certificate(&c4.vertex_set()), cert);

        let bare = DigraphDocument::parse("digraph d\nv u\nv v\nv z\narc u z\narc v z\n").unwrap();
        let g = Graph::from_edges([("u", "v")]).unwrap();
        let cert = bare.to_certificate(&g.vertex_set());
        assert_eq!(cert.added_vertices, vec![VertexId::from("z")]);

        assert!(DigraphDocument::parse("digraph d\nv u\narc u u\n").is_err());
        assert!(DigraphDocument::parse("graph d\n").is_err());
        assert!(DigraphDocument::parse("digraph d\nv u\nv z\narc u z\narc u z\n").is_err());
    }

    #[test]
    fn dot_output() {
        let c4 = Graph::from_edges([("u", "v"), ("v", "a"), ("a", "b"), ("b", "u")]).unwrap();
        let holes = crate::holes::enumerate_holes(&c4);
        let dot = graph_to_dot(&c4, "c4", &holes, &VertexSet::new());
        assert_eq!(dot.matches("color=red").count(), 4);
        let cert = build_bounded_digraph(&c4).unwrap();
        let dot = certificate_to_dot(&cert, "c4");
        assert_eq!(dot.matches("style=dashed").count(), 2);
    }
}
