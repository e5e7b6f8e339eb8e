use super::{BitMatrix, Graph, Label, Provenance};
use crate::ring::{RingSpec, TableRing};

/// `Γ(R)` for `R = Z_n` or `Z_n[i]`: vertices are the nonzero zero divisors
/// in element order, `x ~ y` iff `x ≠ y` and `xy = 0`.
pub fn zero_divisor_graph(ring: &RingSpec) -> Graph {
    let vertices = ring.zero_divisor_set();
    let n = vertices.len();
    let mut adjacency = BitMatrix::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if vertices[i].mul(&vertices[j]).is_zero() {
                adjacency.set(i, j, true);
                adjacency.set(j, i, true);
            }
        }
    }
    let provenance = Provenance { n: Some(ring.n()), kind: Some(ring.kind().as_str().to_string()), transforms: vec![] };
    Graph::from_matrix(vertices.iter().map(Label::from).collect(), adjacency, provenance)
}

/// Zero-divisor graph of a ring given by its multiplication table.
pub fn table_ring_graph(ring: &TableRing) -> Graph {
    let vertices = ring.zero_divisors();
    let n = vertices.len();
    let zero = ring.zero();
    let mut adjacency = BitMatrix::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if ring.mul(vertices[i], vertices[j]) == zero {
                adjacency.set(i, j, true);
                adjacency.set(j, i, true);
            }
        }
    }
    let labels = vertices.iter().map(|&v| ring.label(v).clone()).collect();
    let provenance = Provenance { n: None, kind: Some("table".to_string()), transforms: vec![] };
    Graph::from_matrix(labels, adjacency, provenance)
}

/// `Γ(R₁ × R₂)` with componentwise multiplication.
pub fn product_ring_graph(left: &TableRing, right: &TableRing) -> Graph {
    let product = TableRing::product(left, right);
    let g = table_ring_graph(&product);
    let provenance = Provenance { n: None, kind: Some("product".to_string()), transforms: vec![] };
    g.with_provenance(provenance)
}
