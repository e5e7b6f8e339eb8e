use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{Graph, Label, Provenance, Transform};
use crate::error::{Error, Result};

/// JSON interchange form of a [`Graph`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: Option<u64>,
    pub kind: Option<String>,
    pub transform: Vec<Transform>,
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph) -> Self {
        let p = g.provenance();
        GraphDocument {
            n: p.n,
            kind: p.kind.clone(),
            transform: p.transforms.clone(),
            vertices: g.labels().iter().map(Label::to_string).collect(),
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn into_graph(self) -> Result<Graph> {
        let labels = self.vertices.iter().map(|s| s.parse()).collect::<Result<Vec<Label>>>()?;
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        let provenance = Provenance { n: self.n, kind: self.kind, transforms: self.transform };
        Graph::from_edges(labels, &edges, provenance)
    }
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string_pretty(&GraphDocument::from_graph(g)).expect("graph documents always serialize")
}

pub fn from_json(text: &str) -> Result<Graph> {
    let doc: GraphDocument = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    doc.into_graph()
}

/// Graphviz DOT, one vertex statement per line followed by `--` edges.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for l in g.labels() {
        writeln!(out, "  \"{l}\";").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  \"{}\" -- \"{}\";", g.label(u), g.label(v)).unwrap();
    }
    out.push_str("}\n");
    out
}
