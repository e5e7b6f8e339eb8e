use super::{BitMatrix, Graph, Label, Transform};

/// Same vertices; `u ~ v` iff `u ≠ v` and `u`, `v` are not adjacent in `g`.
pub fn complement(g: &Graph) -> Graph {
    let n = g.order();
    let mut adjacency = BitMatrix::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                adjacency.set(u, v, true);
                adjacency.set(v, u, true);
            }
        }
    }
    let mut provenance = g.provenance().clone();
    provenance.transforms.push(Transform::Complement);
    Graph::from_matrix(g.labels().to_vec(), adjacency, provenance)
}

/// `L(g)`: one vertex per edge of `g` (lexicographic edge order, labelled by
/// the endpoint pair), adjacent iff the edges share an endpoint.
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let m = edges.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
    for (id, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(id);
        incident[v].push(id);
    }
    let mut adjacency = BitMatrix::new(m);
    for ids in &incident {
        for (i, &a) in ids.iter().enumerate() {
            for &b in &ids[i + 1..] {
                adjacency.set(a, b, true);
                adjacency.set(b, a, true);
            }
        }
    }
    let labels = edges.iter().map(|&(u, v)| Label::edge(g.label(u).clone(), g.label(v).clone())).collect();
    let mut provenance = g.provenance().clone();
    provenance.transforms.push(Transform::Line);
    Graph::from_matrix(labels, adjacency, provenance)
}
