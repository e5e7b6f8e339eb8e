use proptest::prelude::*;
use zdg_core::graph::{
    bipartition, complement, connected_components, diameter, from_json, line_graph, product_ring_graph, recognize,
    stats, to_dot, to_json, zero_divisor_graph, Diameter, Graph, Label, StructuralClass,
};
use zdg_core::ring::{make_ring, Element, RingKind, TableRing};

fn gamma(n: u64, kind: RingKind) -> Graph {
    zero_divisor_graph(&make_ring(n, kind).unwrap())
}

#[test]
fn adjacency_is_the_product_relation_up_to_30() {
    for n in 2..=30u64 {
        for kind in [RingKind::Zn, RingKind::ZnGaussian] {
            let ring = make_ring(n, kind).unwrap();
            let zd: Vec<Element> = ring.zero_divisor_set();
            let g = zero_divisor_graph(&ring);
            assert_eq!(g.order(), zd.len());
            for (i, x) in zd.iter().enumerate() {
                assert_eq!(g.label(i), &Label::from(x));
                assert!(!g.has_edge(i, i));
                for (j, y) in zd.iter().enumerate().skip(i + 1) {
                    let adjacent = x.mul(y).is_zero();
                    assert_eq!(g.has_edge(i, j), adjacent, "n={n} {kind:?} {x} {y}");
                    assert_eq!(g.has_edge(j, i), adjacent);
                }
            }
        }
    }
}

#[test]
fn small_graphs_have_the_expected_shape() {
    assert_eq!(recognize(&gamma(14, RingKind::Zn)), StructuralClass::Star(6));
    assert_eq!(stats(&gamma(4, RingKind::ZnGaussian)).pendant_count, 4);
    assert_eq!(recognize(&gamma(9, RingKind::ZnGaussian)), StructuralClass::CompleteK(8));
    for p in [5, 13] {
        let k = (p - 1) as usize;
        assert_eq!(recognize(&gamma(p, RingKind::ZnGaussian)), StructuralClass::CompleteBipartite(k, k));
    }
    assert_eq!(diameter(&gamma(15, RingKind::Zn)), Diameter::Finite(2));
    assert_eq!(diameter(&Graph::complete(8)), Diameter::Finite(1));
    let g = product_ring_graph(&TableRing::zn(4).unwrap(), &TableRing::zn(3).unwrap());
    assert_eq!(g.size(), 8);
}

#[test]
fn gaussian_crt_product_matches_the_direct_graph() {
    let direct = gamma(21, RingKind::ZnGaussian);
    let product = product_ring_graph(&TableRing::gaussian(3).unwrap(), &TableRing::gaussian(7).unwrap());
    assert_eq!(recognize(&direct), StructuralClass::CompleteBipartite(8, 48));
    assert_eq!(recognize(&product), recognize(&direct));
    let parts = bipartition(&direct).unwrap();
    assert_eq!((parts.small.len(), parts.large.len()), (8, 48));
}

#[test]
fn complement_of_split_prime_graph_is_two_cliques() {
    let c = complement(&gamma(5, RingKind::ZnGaussian));
    let comps = connected_components(&c);
    assert_eq!(comps.len(), 2);
    assert!(comps.iter().all(|h| recognize(h) == StructuralClass::CompleteK(4)));
}

#[test]
fn complement_of_two_power_graph_isolates_one_vertex() {
    for m in [2u64, 3] {
        let h = 1 << (m - 1);
        let c = complement(&gamma(1 << m, RingKind::ZnGaussian));
        let v = c.index_of(&Label::Gaussian { re: h, im: h }).unwrap();
        assert_eq!(c.degree(v), 0);
        assert_eq!(connected_components(&c).len(), 2);
    }
}

fn line_identity(g: &Graph) {
    let l = line_graph(g);
    assert_eq!(l.order(), g.size());
    let expected: usize = (0..g.order()).map(|v| g.degree(v) * g.degree(v).saturating_sub(1) / 2).sum();
    assert_eq!(l.size(), expected);
}

#[test]
fn line_graph_edge_identity_on_ring_graphs() {
    for n in 2..=30u64 {
        for kind in [RingKind::Zn, RingKind::ZnGaussian] {
            line_identity(&gamma(n, kind));
        }
    }
}

#[test]
fn export_formats() {
    let g = line_graph(&complement(&gamma(6, RingKind::ZnGaussian)));
    assert_eq!(from_json(&to_json(&g)).unwrap(), g);
    let dot = to_dot(&gamma(5, RingKind::ZnGaussian));
    assert!(dot.starts_with("graph G {\n"));
    assert!(dot.contains("  \"1+2i\";\n"));
    assert!(dot.lines().any(|l| l.contains(" -- ")));
    assert!(from_json("{\"vertices\": []").is_err());
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::with_order(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(14)) {
        let c = complement(&g);
        prop_assert_eq!(c.size() + g.size(), g.order() * g.order().saturating_sub(1) / 2);
        let back = complement(&c);
        prop_assert_eq!(back.labels(), g.labels());
        prop_assert_eq!(back.edges(), g.edges());
    }

    #[test]
    fn line_graph_identity(g in arb_graph(14)) {
        line_identity(&g);
    }

    #[test]
    fn json_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(from_json(&to_json(&g)).unwrap(), g.clone());
        let l = line_graph(&g);
        prop_assert_eq!(from_json(&to_json(&l)).unwrap(), l);
    }

    #[test]
    fn components_partition_the_vertices(g in arb_graph(14)) {
        let comps = connected_components(&g);
        prop_assert_eq!(comps.iter().map(Graph::order).sum::<usize>(), g.order());
        prop_assert_eq!(comps.iter().map(Graph::size).sum::<usize>(), g.size());
    }
}
