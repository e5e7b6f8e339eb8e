//! Undirected simple graphs with labelled vertices and a packed adjacency
//! relation, plus zero-divisor graph construction, transforms, structural
//! recognition and DOT/JSON formats.

mod bits;
mod build;
mod format;
mod label;
mod structure;
mod transform;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

pub use bits::{BitMatrix, BitSet};
pub(crate) use bits::{first_bit, iter_bits};
pub use build::{product_ring_graph, table_ring_graph, zero_divisor_graph};
pub use format::{from_json, to_dot, to_json, GraphDocument};
pub use label::Label;
pub use structure::{
    bipartition, bridges, connected_components, cut_vertex, diameter, is_two_connected, recognize, stats,
    Bipartition, Diameter, GraphStats, StructuralClass,
};
pub use transform::{complement, line_graph};
pub(crate) use structure::{component_indices, count_components_without, reach};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Transform {
    Line,
    Complement,
}

impl Transform {
    pub fn apply(&self, g: &Graph) -> Graph {
        match self {
            Transform::Line => line_graph(g),
            Transform::Complement => complement(g),
        }
    }
}

impl std::str::FromStr for Transform {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "line" => Ok(Transform::Line),
            "complement" => Ok(Transform::Complement),
            other => Err(Error::Parse(format!("unknown transform `{other}` (expected line or complement)"))),
        }
    }
}

/// Where a graph came from: the ring it was built over (if any) and the
/// transforms applied since.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub n: Option<u64>,
    pub kind: Option<String>,
    pub transforms: Vec<Transform>,
}

/// Immutable undirected simple graph. Vertex order is construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<Label>,
    adjacency: BitMatrix,
    neighbors: Vec<Vec<usize>>,
    provenance: Provenance,
}

impl Graph {
    /// Builds a graph from labels and an edge list. Self-loops, duplicate
    /// labels and out-of-range endpoints are rejected; repeated edges merge.
    pub fn from_edges(labels: Vec<Label>, edges: &[(usize, usize)], provenance: Provenance) -> Result<Self> {
        let n = labels.len();
        let mut seen = HashSet::with_capacity(n);
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::Parse(format!("duplicate vertex label {l}")));
            }
        }
        let mut adjacency = BitMatrix::new(n);
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, order: n });
                }
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            adjacency.set(u, v, true);
            adjacency.set(v, u, true);
        }
        Ok(Self::from_matrix(labels, adjacency, provenance))
    }

    /// Unlabelled graph on `0..n` with `Int` labels.
    pub fn with_order(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges((0..n as u64).map(Label::Int).collect(), edges, Provenance::default())
    }

    pub(crate) fn from_matrix(labels: Vec<Label>, adjacency: BitMatrix, provenance: Provenance) -> Self {
        let neighbors = (0..labels.len()).map(|i| iter_bits(adjacency.row(i)).collect()).collect();
        Self { labels, adjacency, neighbors, provenance }
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Self::with_order(n, &edges).expect("valid complete graph")
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges: Vec<_> = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))).collect();
        Self::with_order(a + b, &edges).expect("valid complete bipartite graph")
    }

    pub fn cycle(n: usize) -> Self {
        let edges: Vec<_> = (0..n).map(|u| (u, (u + 1) % n)).collect();
        Self::with_order(n, &edges).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|u| (u - 1, u)).collect();
        Self::with_order(n, &edges).expect("valid path")
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &Label) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency.get(u, v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Neighborhood of `v` as packed words.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        self.adjacency.row(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    /// Edges `(u, v)` with `u < v`, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.order()).flat_map(|u| self.neighbors[u].iter().filter(move |&&v| v > u).map(move |&v| (u, v))).collect()
    }

    /// Subgraph induced by `keep` (kept in ascending index order), labels preserved.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut adjacency = BitMatrix::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    adjacency.set(i, j, true);
                    adjacency.set(j, i, true);
                }
            }
        }
        let labels = keep.iter().map(|&u| self.labels[u].clone()).collect();
        Graph::from_matrix(labels, adjacency, self.provenance.clone())
    }

    /// Copy with the adjacency of `{u, v}` flipped. Test hook for fault
    /// injection.
    pub fn with_toggled_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.order();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { index: x, order: n });
            }
        }
        if u == v {
            return Err(Error::Parse("cannot toggle a self-loop".into()));
        }
        let mut adjacency = self.adjacency.clone();
        let value = !adjacency.get(u, v);
        adjacency.set(u, v, value);
        adjacency.set(v, u, value);
        Ok(Graph::from_matrix(self.labels.clone(), adjacency, self.provenance.clone()))
    }

    /// True when `cycle` lists distinct vertices, consecutive ones adjacent,
    /// last adjacent to first, and has length at least 3.
    pub fn is_cycle(&self, cycle: &[usize]) -> bool {
        let n = self.order();
        if cycle.len() < 3 || cycle.iter().any(|&v| v >= n) {
            return false;
        }
        let mut seen = BitSet::new(n);
        for &v in cycle {
            if seen.contains(v) {
                return false;
            }
            seen.insert(v);
        }
        cycle.iter().zip(cycle.iter().cycle().skip(1)).all(|(&a, &b)| self.has_edge(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_rejects_bad_input() {
        assert!(Graph::with_order(3, &[(0, 0)]).is_err());
        assert!(Graph::with_order(3, &[(0, 3)]).is_err());
        let dup = vec![Label::Int(1), Label::Int(1)];
        assert!(Graph::from_edges(dup, &[], Provenance::default()).is_err());
    }

    #[test]
    fn basic_queries() {
        let g = Graph::cycle(5);
        assert_eq!(g.order(), 5);
        assert_eq!(g.size(), 5);
        assert!(g.has_edge(4, 0));
        assert_eq!(g.neighbors(0), &[1, 4]);
        assert!(g.is_cycle(&[0, 1, 2, 3, 4]));
        assert!(!g.is_cycle(&[0, 1, 2]));
        assert!(!g.is_cycle(&[0, 1, 2, 3, 4, 0]));
        assert_eq!(Graph::complete(6).size(), 15);
        assert_eq!(Graph::complete_bipartite(2, 4).size(), 8);
    }

    #[test]
    fn induced_and_toggle() {
        let g = Graph::complete(4);
        let h = g.induced(&[3, 1]);
        assert_eq!(h.labels(), &[Label::Int(1), Label::Int(3)]);
        assert_eq!(h.size(), 1);
        let t = g.with_toggled_edge(0, 1).unwrap();
        assert!(!t.has_edge(0, 1) && !t.has_edge(1, 0));
        assert_eq!(t.with_toggled_edge(1, 0).unwrap(), g);
    }
}
