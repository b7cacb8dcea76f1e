use std::fmt::Write as _;

use crate::{Graph, HatGraphError};

/// Supported serialization formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    GraphMl,
}

impl GraphFormat {
    fn name(self) -> &'static str {
        match self {
            GraphFormat::Dot => "DOT",
            GraphFormat::GraphMl => "GraphML",
        }
    }
}

/// Serializes a graph deterministically: vertices `0..n` each declared once
/// in order, then the canonical edge list (`u < v`, lexicographic).
pub fn export_graph(graph: &Graph, format: GraphFormat) -> String {
    let mut out = String::new();
    match format {
        GraphFormat::Dot => {
            out.push_str("graph G {\n");
            for v in 0..graph.vertex_count() {
                let _ = writeln!(out, "  {v};");
            }
            for (u, v) in graph.edges() {
                let _ = writeln!(out, "  {u} -- {v};");
            }
            out.push_str("}\n");
        }
        GraphFormat::GraphMl => {
            out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
            out.push_str("<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n");
            out.push_str("  <graph id=\"G\" edgedefault=\"undirected\">\n");
            for v in 0..graph.vertex_count() {
                let _ = writeln!(out, "    <node id=\"n{v}\"/>");
            }
            for (u, v) in graph.edges() {
                let _ = writeln!(out, "    <edge source=\"n{u}\" target=\"n{v}\"/>");
            }
            out.push_str("  </graph>\n");
            out.push_str("</graphml>\n");
        }
    }
    out
}

fn parse_error(format: GraphFormat, detail: impl Into<String>) -> HatGraphError {
    HatGraphError::ParseError { format: format.name().to_string(), detail: detail.into() }
}

/// Reads back a document produced by [`export_graph`]. This is a narrow
/// reimport parser for this crate's own deterministic emission, not a general
/// DOT or GraphML reader: it accepts exactly the line shapes emitted above
/// (modulo surrounding whitespace).
pub fn import_graph(text: &str, format: GraphFormat) -> Result<Graph, HatGraphError> {
    match format {
        GraphFormat::Dot => import_dot(text),
        GraphFormat::GraphMl => import_graphml(text),
    }
}

fn import_dot(text: &str) -> Result<Graph, HatGraphError> {
    let fmt = GraphFormat::Dot;
    let mut vertices = 0usize;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    let mut opened = false;
    let mut closed = false;
    for raw in text.lines() {
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if !opened {
            if line == "graph G {" {
                opened = true;
                continue;
            }
            return Err(parse_error(fmt, format!("expected header, found {line:?}")));
        }
        if line == "}" {
            closed = true;
            continue;
        }
        if closed {
            return Err(parse_error(fmt, format!("content after closing brace: {line:?}")));
        }
        let Some(statement) = line.strip_suffix(';') else {
            return Err(parse_error(fmt, format!("missing semicolon in {line:?}")));
        };
        if let Some((u, v)) = statement.split_once("--") {
            let u: u32 = u
                .trim()
                .parse()
                .map_err(|_| parse_error(fmt, format!("bad endpoint in {line:?}")))?;
            let v: u32 = v
                .trim()
                .parse()
                .map_err(|_| parse_error(fmt, format!("bad endpoint in {line:?}")))?;
            edges.push((u, v));
        } else {
            let v: usize = statement
                .trim()
                .parse()
                .map_err(|_| parse_error(fmt, format!("bad vertex id in {line:?}")))?;
            if v != vertices {
                return Err(parse_error(
                    fmt,
                    format!("vertex ids must appear in order; saw {v} after {vertices}"),
                ));
            }
            vertices += 1;
        }
    }
    if !opened || !closed {
        return Err(parse_error(fmt, "document is not a complete graph block"));
    }
    Graph::from_edges(vertices, &edges)
}

/// Pulls the `id`-like attribute value `n<digits>` out of `attr="n7"`.
fn node_ref(fragment: &str, attr: &str) -> Option<u32> {
    let rest = fragment.split_once(&format!("{attr}=\"n"))?.1;
    let value = rest.split_once('"')?.0;
    value.parse().ok()
}

fn import_graphml(text: &str) -> Result<Graph, HatGraphError> {
    let fmt = GraphFormat::GraphMl;
    if !text.contains("<graphml") || !text.contains("</graphml>") {
        return Err(parse_error(fmt, "missing graphml envelope"));
    }
    let mut vertices = 0usize;
    let mut edges: Vec<(u32, u32)> = Vec::new();
    for raw in text.lines() {
        let line = raw.trim();
        if let Some(rest) = line.strip_prefix("<node ") {
            let v = node_ref(rest, "id")
                .ok_or_else(|| parse_error(fmt, format!("unreadable node line {line:?}")))?;
            if v as usize != vertices {
                return Err(parse_error(
                    fmt,
                    format!("node ids must appear in order; saw n{v} after {vertices}"),
                ));
            }
            vertices += 1;
        } else if let Some(rest) = line.strip_prefix("<edge ") {
            let u = node_ref(rest, "source")
                .ok_or_else(|| parse_error(fmt, format!("unreadable edge line {line:?}")))?;
            let v = node_ref(rest, "target")
                .ok_or_else(|| parse_error(fmt, format!("unreadable edge line {line:?}")))?;
            edges.push((u, v));
        }
    }
    Graph::from_edges(vertices, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_graph_round_trips_in_both_formats() {
        let empty = Graph::from_edges(0, &[]).unwrap();
        for format in [GraphFormat::Dot, GraphFormat::GraphMl] {
            let doc = export_graph(&empty, format);
            assert!(!doc.is_empty());
            assert_eq!(import_graph(&doc, format).unwrap(), empty);
        }
    }

    #[test]
    fn complete_graph_round_trips_in_both_formats() {
        let k4 = Graph::complete(4);
        for format in [GraphFormat::Dot, GraphFormat::GraphMl] {
            let doc = export_graph(&k4, format);
            let back = import_graph(&doc, format).unwrap();
            assert_eq!(back, k4);
            assert_eq!(back.vertex_count(), 4);
            assert_eq!(back.edge_count(), 6);
        }
    }

    #[test]
    fn dot_emission_is_the_documented_shape() {
        let g = Graph::from_edges(3, &[(0, 2), (0, 1)]).unwrap();
        assert_eq!(
            export_graph(&g, GraphFormat::Dot),
            "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  0 -- 2;\n}\n"
        );
    }

    #[test]
    fn graphml_emission_names_nodes_and_edges() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let doc = export_graph(&g, GraphFormat::GraphMl);
        assert!(doc.contains("<node id=\"n0\"/>"));
        assert!(doc.contains("<node id=\"n1\"/>"));
        assert!(doc.contains("<edge source=\"n0\" target=\"n1\"/>"));
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(
            import_graph("digraph G {\n}\n", GraphFormat::Dot),
            Err(HatGraphError::ParseError { .. })
        ));
        assert!(matches!(
            import_graph("graph G {\n  0\n}\n", GraphFormat::Dot),
            Err(HatGraphError::ParseError { .. })
        ));
        assert!(matches!(
            import_graph("graph G {\n", GraphFormat::Dot),
            Err(HatGraphError::ParseError { .. })
        ));
        assert!(matches!(
            import_graph("<nothing/>", GraphFormat::GraphMl),
            Err(HatGraphError::ParseError { .. })
        ));
    }
}
