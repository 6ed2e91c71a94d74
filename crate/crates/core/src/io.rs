//! Coloring documents (JSON) and Graphviz export.
//!
//! A document lists only red edges; every other host edge is blue. The pendant
//! vertex, when present, has index `n_core`.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::coloring::{HostSpec, TwoColoring};
use crate::error::DocumentError;
use crate::formulas::CaseTag;

pub const SCHEMA_VERSION: &str = "starcrit-coloring/1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HostDoc {
    pub n_core: usize,
    pub pendant_k: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator: Option<String>,
}

impl Metadata {
    pub fn is_empty(&self) -> bool {
        *self == Metadata::default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ColoringDocument {
    pub schema_version: String,
    pub host: HostDoc,
    pub red_edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Metadata::is_empty")]
    pub metadata: Metadata,
}

impl ColoringDocument {
    pub fn from_coloring(c: &TwoColoring, metadata: Metadata) -> Self {
        let host = c.host();
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            host: HostDoc {
                n_core: host.n_core(),
                pendant_k: host.pendant_k(),
            },
            red_edges: c.red_edges().into_iter().map(|(u, v)| [u, v]).collect(),
            metadata,
        }
    }

    pub fn to_coloring(&self) -> Result<TwoColoring, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::SchemaVersion(self.schema_version.clone()));
        }
        let HostDoc { n_core, pendant_k } = self.host;
        if pendant_k > n_core {
            return Err(DocumentError::PendantTooLarge { n_core, pendant_k });
        }
        let host = HostSpec::new(n_core, pendant_k).map_err(DocumentError::Host)?;
        let mut c = TwoColoring::all_blue(host);
        let mut seen = BTreeSet::new();
        for &[u, v] in &self.red_edges {
            if u == v {
                return Err(DocumentError::Loop(u));
            }
            if u >= host.order() || v >= host.order() {
                return Err(DocumentError::EdgeOutOfRange(u, v));
            }
            if u > v {
                return Err(DocumentError::Unordered(u, v));
            }
            if !seen.insert((u, v)) {
                return Err(DocumentError::DuplicateEdge(u, v));
            }
            if !host.is_edge(u, v) {
                return Err(DocumentError::NotHostEdge(u, v));
            }
            c.set_red(u, v, true).map_err(DocumentError::Host)?;
        }
        Ok(c)
    }
}

/// Canonical text: fixed key order, lexicographically sorted edges, trailing newline.
pub fn serialize(c: &TwoColoring) -> String {
    serialize_with(c, Metadata::default())
}

pub fn serialize_with(c: &TwoColoring, metadata: Metadata) -> String {
    let doc = ColoringDocument::from_coloring(c, metadata);
    let mut out = String::new();
    writeln!(out, "{{").unwrap();
    writeln!(out, "  \"schema_version\": {},", json(&doc.schema_version)).unwrap();
    writeln!(
        out,
        "  \"host\": {{\"n_core\": {}, \"pendant_k\": {}}},",
        doc.host.n_core, doc.host.pendant_k
    )
    .unwrap();
    let edges = doc
        .red_edges
        .iter()
        .map(|[u, v]| format!("[{u},{v}]"))
        .collect::<Vec<_>>()
        .join(",");
    if doc.metadata.is_empty() {
        writeln!(out, "  \"red_edges\": [{edges}]").unwrap();
    } else {
        writeln!(out, "  \"red_edges\": [{edges}],").unwrap();
        writeln!(out, "  \"metadata\": {}", json(&doc.metadata)).unwrap();
    }
    out.push_str("}\n");
    out
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("plain data always serializes")
}

pub fn parse_document(text: &str) -> Result<ColoringDocument, DocumentError> {
    Ok(serde_json::from_str(text)?)
}

pub fn parse(text: &str) -> Result<TwoColoring, DocumentError> {
    parse_document(text)?.to_coloring()
}

/// Graphviz description: core vertices on a circle in index order, the pendant
/// vertex outside it, pendant blue edges dashed. Render with `neato -n`.
pub fn export_dot(c: &TwoColoring) -> String {
    let host = c.host();
    let n = host.n_core();
    let radius = 1.0 + n as f64 * 0.25;
    let mut out = String::new();
    writeln!(out, "graph coloring {{").unwrap();
    writeln!(out, "  label=\"{host}\";").unwrap();
    writeln!(out, "  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];").unwrap();
    for v in 0..n {
        let angle = 2.0 * PI * v as f64 / n as f64;
        let (x, y) = (radius * angle.cos(), radius * angle.sin());
        writeln!(out, "  {v} [label=\"v{v}\", pos=\"{x:.3},{y:.3}!\"];").unwrap();
    }
    if let Some(x) = host.pendant() {
        let px = radius * 1.6;
        writeln!(out, "  {x} [label=\"x\", pos=\"{px:.3},0.000!\"];").unwrap();
    }
    for (u, v) in host.edges() {
        let pendant_edge = Some(v) == host.pendant();
        let attrs = match (c.is_red(u, v), pendant_edge) {
            (true, _) => "color=red",
            (false, true) => "color=blue, style=dashed",
            (false, false) => "color=blue",
        };
        writeln!(out, "  {u} -- {v} [{attrs}];").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build_lemma1_case4, extend_lemma2_case3};

    #[test]
    fn all_red_triangle_document() {
        let c = TwoColoring::all_red(HostSpec::complete(3).unwrap());
        let doc = ColoringDocument::from_coloring(&c, Metadata::default());
        assert_eq!(doc.red_edges, vec![[0, 1], [0, 2], [1, 2]]);
        let text = serialize(&c);
        assert!(text.ends_with("}\n"));
        assert!(text.contains("\"red_edges\": [[0,1],[0,2],[1,2]]"));
        assert_eq!(parse(&text).unwrap(), c);
    }

    #[test]
    fn case4_document_counts() {
        let c = build_lemma1_case4(3).unwrap();
        let doc = ColoringDocument::from_coloring(&c, Metadata::default());
        assert_eq!(doc.red_edges.len(), 6);
        assert_eq!(c.host().edge_count(), 15);
        assert_eq!(c.blue_edges().len(), 9);
    }

    #[test]
    fn pendant_host_is_recorded() {
        let c = extend_lemma2_case3(6, 7).unwrap();
        let doc = ColoringDocument::from_coloring(&c, Metadata::default());
        assert_eq!(doc.host, HostDoc { n_core: 12, pendant_k: 6 });
        assert_eq!(parse(&serialize(&c)).unwrap(), c);
    }

    #[test]
    fn metadata_round_trips() {
        let c = build_lemma1_case4(3).unwrap();
        let meta = Metadata {
            case: Some(CaseTag::LargeN),
            n: Some(3),
            m: Some(4),
            generator: Some("l1c4".into()),
        };
        let text = serialize_with(&c, meta.clone());
        let doc = parse_document(&text).unwrap();
        assert_eq!(doc.metadata, meta);
        assert_eq!(doc.to_coloring().unwrap(), c);
    }

    fn doc(host: &str, edges: &str) -> String {
        format!(
            "{{\"schema_version\": \"{SCHEMA_VERSION}\", \"host\": {host}, \"red_edges\": {edges}}}"
        )
    }

    #[test]
    fn parse_diagnostics() {
        let k6 = "{\"n_core\": 6, \"pendant_k\": 0}";
        assert!(matches!(parse(&doc(k6, "[[5,5]]")), Err(DocumentError::Loop(5))));
        assert!(matches!(
            parse(&doc(k6, "[[0,6]]")),
            Err(DocumentError::EdgeOutOfRange(0, 6))
        ));
        assert!(matches!(
            parse(&doc(k6, "[[0,1],[0,1]]")),
            Err(DocumentError::DuplicateEdge(0, 1))
        ));
        assert!(matches!(
            parse(&doc(k6, "[[3,1]]")),
            Err(DocumentError::Unordered(3, 1))
        ));
        let pendant = "{\"n_core\": 4, \"pendant_k\": 2}";
        assert!(matches!(
            parse(&doc(pendant, "[[3,4]]")),
            Err(DocumentError::NotHostEdge(3, 4))
        ));
        let bad = "{\"n_core\": 3, \"pendant_k\": 4}";
        assert!(matches!(
            parse(&doc(bad, "[]")),
            Err(DocumentError::PendantTooLarge { n_core: 3, pendant_k: 4 })
        ));
        assert!(matches!(parse("{not json"), Err(DocumentError::Malformed(_))));
        let wrong = "{\"schema_version\": \"v0\", \"host\": {\"n_core\": 2, \"pendant_k\": 0}, \"red_edges\": []}";
        assert!(matches!(parse(wrong), Err(DocumentError::SchemaVersion(_))));
    }

    #[test]
    fn dot_for_red_triangle() {
        let c = TwoColoring::all_red(HostSpec::complete(3).unwrap());
        let dot = export_dot(&c);
        assert_eq!(dot.matches("color=red").count(), 3);
        assert!(!dot.contains("color=blue"));
    }

    #[test]
    fn dot_dashes_pendant_blue_edges() {
        let c = extend_lemma2_case3(3, 3).unwrap();
        let dot = export_dot(&c);
        assert_eq!(dot.matches("style=dashed").count(), 3);
        assert!(dot.contains("6 [label=\"x\""));
    }
}
