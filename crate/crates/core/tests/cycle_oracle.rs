use std::collections::BTreeSet;

use proptest::prelude::*;
use zdg_core::cycles::{
    check_diameter_condition, check_fan_condition, check_line_pancyclic_condition, cycle_spectrum, find_cut_certificate,
    girth, has_cycle_of_length, is_bipancyclic, is_hamiltonian, is_pancyclic, is_r_graph, CertificateStrategy,
    CycleVerdict, Girth, HamiltonVerdict, Refutation, SearchOutcome, DEFAULT_BUDGET,
};
use zdg_core::graph::{complement, is_two_connected, line_graph, Graph};
use zdg_core::suite::corpus::small_corpus;

/// Cycle lengths by enumerating every simple path from its smallest vertex,
/// memoized over (vertex set, endpoint).
fn subset_oracle(g: &Graph) -> BTreeSet<usize> {
    let n = g.order();
    assert!(n <= 16);
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | 1 << w)).collect();
    let mut present = BTreeSet::new();
    for s in 0..n {
        let higher: u32 = !((1u32 << (s + 1)) - 1) & ((1u32 << n) - 1);
        let mut ends = vec![0u32; 1 << n];
        ends[1 << s] = 1 << s;
        for mask in 0..(1u32 << n) {
            let e = ends[mask as usize];
            if e == 0 {
                continue;
            }
            let len = mask.count_ones() as usize;
            for v in (0..n).filter(|&v| e >> v & 1 == 1) {
                if len >= 3 && adj[v] >> s & 1 == 1 {
                    present.insert(len);
                }
                let mut next = adj[v] & higher & !mask;
                while next != 0 {
                    let w = next.trailing_zeros();
                    next &= next - 1;
                    ends[(mask | 1 << w) as usize] |= 1 << w;
                }
            }
        }
    }
    present
}

/// Cycle lengths by trying every ordering of every vertex subset.
fn permutation_oracle(g: &Graph) -> BTreeSet<usize> {
    fn extend(g: &Graph, path: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut BTreeSet<usize>) {
        let (first, last) = (path[0], *path.last().unwrap());
        if path.len() >= 3 && g.has_edge(last, first) {
            out.insert(path.len());
        }
        for w in 0..g.order() {
            if !used[w] && w > first && g.has_edge(last, w) {
                used[w] = true;
                path.push(w);
                extend(g, path, used, out);
                path.pop();
                used[w] = false;
            }
        }
    }
    let mut out = BTreeSet::new();
    for s in 0..g.order() {
        let mut used = vec![false; g.order()];
        used[s] = true;
        extend(g, &mut vec![s], &mut used, &mut out);
    }
    out
}

fn assert_spectrum_matches(name: &str, g: &Graph) {
    let expected = subset_oracle(g);
    if g.order() <= 8 {
        assert_eq!(permutation_oracle(g), expected, "{name}: oracles disagree");
    }
    let s = cycle_spectrum(g, DEFAULT_BUDGET);
    assert!(s.undecided.is_empty(), "{name}: undecided {:?}", s.undecided);
    assert!(s.exhaustive);
    assert_eq!(s.present, expected, "{name}");
    assert!(s.validate(g), "{name}: witnesses");
    for (k, c) in &s.witnesses {
        assert!(c.len() == *k && g.is_cycle(c), "{name}: witness {k}");
    }
    for k in 3..=g.order() {
        assert_eq!(s.present.contains(&k) || s.refuted.contains_key(&k), true, "{name}: length {k} not decided");
    }
}

fn assert_verdicts_match(name: &str, g: &Graph) {
    let spectrum = subset_oracle(g);
    let n = g.order();
    let pan = n >= 3 && (3..=n).all(|k| spectrum.contains(&k));
    let bipan = n >= 4 && (4..=n).step_by(2).all(|k| spectrum.contains(&k));
    match is_pancyclic(g, DEFAULT_BUDGET) {
        CycleVerdict::Yes { spectrum: s } => assert!(pan && s.validate(g), "{name}"),
        CycleVerdict::No { missing } => {
            assert!(!pan, "{name}");
            assert!(missing.keys().all(|k| !spectrum.contains(k)), "{name}: refuted a present length");
        }
        CycleVerdict::Undecided { .. } => panic!("{name}: undecided"),
    }
    assert_eq!(is_bipancyclic(g, DEFAULT_BUDGET).is_yes(), bipan, "{name}");
    assert!(!is_bipancyclic(g, DEFAULT_BUDGET).is_yes() || bipan);
    match is_hamiltonian(g, DEFAULT_BUDGET) {
        HamiltonVerdict::Yes { cycle } => assert!(cycle.len() == n && g.is_cycle(&cycle), "{name}"),
        HamiltonVerdict::No { reason } => {
            assert!(!spectrum.contains(&n), "{name}: refuted a Hamiltonian graph");
            if let Refutation::CutCertificate(c) = reason {
                assert!(c.validate(g), "{name}: certificate");
            }
        }
        HamiltonVerdict::Undecided { .. } => panic!("{name}: undecided"),
    }
    match girth(g) {
        Girth::Cycle(c) => {
            assert!(g.is_cycle(&c), "{name}");
            assert_eq!(Some(&c.len()), spectrum.first(), "{name}");
        }
        Girth::Acyclic => assert!(spectrum.is_empty(), "{name}"),
    }
}

#[test]
fn spectrum_matches_oracles_on_corpus() {
    let corpus = small_corpus(12);
    assert!(corpus.len() >= 200, "corpus has {} graphs", corpus.len());
    for c in &corpus {
        assert!(c.graph.order() <= 12);
        assert_spectrum_matches(&c.name, &c.graph);
    }
}

#[test]
fn verdicts_match_oracle_on_corpus() {
    for c in small_corpus(12) {
        assert_verdicts_match(&c.name, &c.graph);
    }
}

#[test]
fn certificates_never_appear_on_hamiltonian_graphs() {
    for c in small_corpus(12) {
        let g = &c.graph;
        if let Some(cert) = find_cut_certificate(g, &CertificateStrategy::defaults()) {
            assert!(cert.validate(g), "{}", c.name);
            assert!(!subset_oracle(g).contains(&g.order()), "{}", c.name);
        }
    }
}

/// An R-graph witness by trying every ordered quadruple.
fn brute_r_graph(g: &Graph) -> bool {
    let n = g.order();
    let quads = (0..n).flat_map(|r| (0..n).flat_map(move |s| (0..n).flat_map(move |t| (0..n).map(move |u| (r, s, t, u)))));
    quads.into_iter().any(|(r, s, t, u)| {
        BTreeSet::from([r, s, t, u]).len() == 4
            && g.has_edge(r, s)
            && g.has_edge(s, t)
            && g.has_edge(t, u)
            && g.has_edge(u, r)
            && (0..n).all(|v| [r, s, t, u].contains(&v) || g.has_edge(v, r) || g.has_edge(v, t))
    })
}

/// The distance-2 degree condition, from all-pairs distances.
fn brute_fan(g: &Graph) -> bool {
    let n = g.order();
    let at_distance_two = |u: usize, v: usize| !g.has_edge(u, v) && (0..n).any(|w| g.has_edge(u, w) && g.has_edge(w, v));
    (0..n).all(|u| (u + 1..n).all(|v| u == v || !at_distance_two(u, v) || 2 * g.degree(u).max(g.degree(v)) >= n))
}

#[test]
fn r_graph_and_fan_detection_match_brute_force() {
    for c in small_corpus(10) {
        let g = &c.graph;
        if g.order() >= 5 {
            let found = is_r_graph(g).unwrap();
            assert_eq!(found.is_some(), brute_r_graph(g), "{}", c.name);
            if let Some(w) = found {
                assert!(w.validate(g));
            }
        }
        if g.order() > 3 && is_two_connected(g) {
            assert_eq!(check_fan_condition(g).unwrap().holds, brute_fan(g), "{}", c.name);
        }
    }
}

#[test]
fn sufficient_conditions_imply_their_conclusions_up_to_12_vertices() {
    let mut fired = [0usize; 4];
    for c in small_corpus(12) {
        let g = &c.graph;
        if g.order() >= 5 && is_r_graph(g).unwrap().is_some() {
            fired[0] += 1;
            assert!(is_pancyclic(&line_graph(g), DEFAULT_BUDGET).is_yes(), "R-graph {}", c.name);
        }
        if check_line_pancyclic_condition(g).is_ok_and(|x| x.holds) {
            fired[1] += 1;
            assert!(is_pancyclic(&line_graph(g), DEFAULT_BUDGET).is_yes(), "degree sums {}", c.name);
        }
        if check_fan_condition(g).is_ok_and(|x| x.holds) {
            fired[2] += 1;
            assert!(is_hamiltonian(g, DEFAULT_BUDGET).is_yes(), "distance-2 degrees {}", c.name);
        }
        if check_diameter_condition(g) {
            fired[3] += 1;
            assert!(is_hamiltonian(&line_graph(g), DEFAULT_BUDGET).is_yes(), "diameter {}", c.name);
        }
    }
    assert!(fired.iter().all(|&f| f > 0), "{fired:?}");
}

#[test]
fn ring_line_graphs_and_complements_match_oracle() {
    use zdg_core::graph::zero_divisor_graph;
    use zdg_core::ring::{make_ring, RingKind};
    let g4 = zero_divisor_graph(&make_ring(4, RingKind::ZnGaussian).unwrap());
    let l = line_graph(&g4);
    assert_eq!(l.order(), 7);
    assert_eq!(subset_oracle(&l), (3..=7).collect());
    assert_spectrum_matches("L(gamma(Z_4[i]))", &l);
    assert_eq!(subset_oracle(&g4), BTreeSet::from([3]));
    let c6 = complement(&zero_divisor_graph(&make_ring(3, RingKind::Zn).unwrap()));
    assert_spectrum_matches("complement(gamma(Z_3))", &c6);
}

fn arb_graph(max: usize) -> impl Strategy<Value = Graph> {
    (1..=max, 0.1f64..0.9).prop_flat_map(|(n, p)| {
        proptest::collection::vec(proptest::bool::weighted(p), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::with_order(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn random_graphs_match_oracle(g in arb_graph(11)) {
        assert_spectrum_matches("random", &g);
        assert_verdicts_match("random", &g);
    }

    #[test]
    fn single_length_search_matches_oracle(g in arb_graph(11), k in 3usize..12) {
        let present = subset_oracle(&g);
        match has_cycle_of_length(&g, k, DEFAULT_BUDGET) {
            Ok(SearchOutcome::Found(c)) => prop_assert!(c.len() == k && g.is_cycle(&c)),
            Ok(SearchOutcome::NotFound(_)) => prop_assert!(!present.contains(&k)),
            Ok(SearchOutcome::BudgetExhausted { .. }) => prop_assert!(false, "budget"),
            Err(_) => prop_assert!(k > g.order()),
        }
    }

    #[test]
    fn exhausted_budget_never_decides(g in arb_graph(11)) {
        // a budget of one expansion cannot settle a hard length, and must say so
        if let Ok(SearchOutcome::Found(c)) = has_cycle_of_length(&g, g.order().max(3), 1) {
            prop_assert!(g.is_cycle(&c));
        }
        if let HamiltonVerdict::No { reason: Refutation::ExhaustiveSearch { .. } } = is_hamiltonian(&g, 1) {
            prop_assert!(!subset_oracle(&g).contains(&g.order()));
        }
    }
}
