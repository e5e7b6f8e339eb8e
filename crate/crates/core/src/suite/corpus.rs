//! Deterministic corpus of small graphs: zero-divisor graphs of `Z_n` and
//! `Z_n[i]` for `n <= 13` with their line graphs and complements, a few
//! named families, and seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{complement, line_graph, zero_divisor_graph, Graph};
use crate::ring::{make_ring, RingKind};

const SEED: u64 = 0x00c0_ffee_2d5e;
const DENSITIES: [f64; 3] = [0.3, 0.5, 0.7];
const PER_DENSITY: usize = 8;

#[derive(Debug, Clone)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: Graph,
}

/// Every graph has between 1 and `max_order` vertices. The list and its
/// order depend only on `max_order`.
pub fn small_corpus(max_order: usize) -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    let mut push = |name: String, graph: Graph| {
        if (1..=max_order).contains(&graph.order()) {
            out.push(CorpusGraph { name, graph });
        }
    };
    for n in 2..=13u64 {
        for kind in [RingKind::Zn, RingKind::ZnGaussian] {
            let g = zero_divisor_graph(&make_ring(n, kind).expect("positive modulus"));
            let name = match kind {
                RingKind::Zn => format!("gamma(Z_{n})"),
                RingKind::ZnGaussian => format!("gamma(Z_{n}[i])"),
            };
            push(format!("L({name})"), line_graph(&g));
            push(format!("complement({name})"), complement(&g));
            push(name, g);
        }
    }
    for k in 3..=max_order {
        push(format!("C_{k}"), Graph::cycle(k));
        push(format!("P_{k}"), Graph::path(k));
        push(format!("K_{k}"), Graph::complete(k));
        if k >= 4 {
            let mut edges: Vec<_> = (1..k).map(|i| (0, i)).collect();
            edges.extend((1..k).map(|i| (i, i % (k - 1) + 1)));
            push(format!("W_{k}"), Graph::with_order(k, &edges).expect("valid wheel"));
        }
    }
    for a in 1..=max_order / 2 {
        for b in a..=max_order - a {
            push(format!("K_{{{a},{b}}}"), Graph::complete_bipartite(a, b));
        }
    }
    push("petersen".to_string(), petersen());
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in 4..=max_order {
        for density in DENSITIES {
            for rep in 0..PER_DENSITY {
                let edges: Vec<(usize, usize)> = (0..n)
                    .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                    .filter(|_| rng.gen_bool(density))
                    .collect();
                push(format!("random(n={n},p={density},#{rep})"), Graph::with_order(n, &edges).expect("valid edges"));
            }
        }
    }
    out
}

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5));
    let edges: Vec<_> = outer.chain(spokes).chain(inner).collect();
    Graph::with_order(10, &edges).expect("valid Petersen graph")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_bounded() {
        let a = small_corpus(12);
        let b = small_corpus(12);
        assert!(a.len() >= 200);
        assert!(a.iter().all(|c| c.graph.order() <= 12));
        assert_eq!(a.iter().map(|c| &c.name).collect::<Vec<_>>(), b.iter().map(|c| &c.name).collect::<Vec<_>>());
        assert!(a.iter().zip(&b).all(|(x, y)| x.graph == y.graph));
    }
}
