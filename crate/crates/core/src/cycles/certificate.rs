use serde::{Deserialize, Serialize};

use crate::graph::{count_components_without, BitSet, Graph};

/// A vertex set `S` whose removal leaves more than `|S|` components, which
/// rules out a Hamiltonian cycle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutCertificate {
    pub cut_set: Vec<usize>,
    pub components_after: usize,
    /// Which strategy produced it.
    pub strategy: String,
}

impl CutCertificate {
    /// Evaluates `S` from scratch; `Some` only when `c(G - S) > |S|` and `S`
    /// is a nonempty proper subset.
    pub fn evaluate(g: &Graph, cut_set: &[usize], strategy: &str) -> Option<Self> {
        let n = g.order();
        let mut set = cut_set.to_vec();
        set.sort_unstable();
        set.dedup();
        if set.is_empty() || set.len() >= n || set.iter().any(|&v| v >= n) {
            return None;
        }
        let removed = BitSet::from_indices(n, set.iter().copied());
        let components_after = count_components_without(g, &removed);
        (components_after > set.len()).then(|| CutCertificate {
            cut_set: set,
            components_after,
            strategy: strategy.to_string(),
        })
    }

    /// Recomputes the component count and checks the inequality.
    pub fn validate(&self, g: &Graph) -> bool {
        CutCertificate::evaluate(g, &self.cut_set, &self.strategy)
            .is_some_and(|c| c.components_after == self.components_after)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateStrategy {
    /// A candidate set supplied by the caller, e.g. one predicted from the
    /// ring structure. It is validated like any other candidate.
    Prescribed { name: String, set: Vec<usize> },
    /// Every subset of size `1..=max_size`, skipping any size whose subset
    /// count exceeds `limit`.
    Subsets { max_size: usize, limit: u64 },
    /// `N(v)` for each vertex in order of increasing degree, then the union
    /// of neighborhoods of all vertices up to each degree threshold.
    LowDegreeNeighborhoods,
}

impl CertificateStrategy {
    pub fn defaults() -> Vec<CertificateStrategy> {
        vec![
            CertificateStrategy::Subsets { max_size: 3, limit: 200_000 },
            CertificateStrategy::LowDegreeNeighborhoods,
        ]
    }
}

/// Tries each strategy in order and returns the first valid certificate.
pub fn find_cut_certificate(g: &Graph, strategies: &[CertificateStrategy]) -> Option<CutCertificate> {
    strategies.iter().find_map(|s| match s {
        CertificateStrategy::Prescribed { name, set } => CutCertificate::evaluate(g, set, name),
        CertificateStrategy::Subsets { max_size, limit } => subsets(g, *max_size, *limit),
        CertificateStrategy::LowDegreeNeighborhoods => neighborhoods(g),
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc.saturating_mul((n - i) as u64) / (i as u64 + 1))
}

fn subsets(g: &Graph, max_size: usize, limit: u64) -> Option<CutCertificate> {
    let n = g.order();
    for size in 1..=max_size.min(n.saturating_sub(1)) {
        if binomial(n, size) > limit {
            break;
        }
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            if let Some(c) = CutCertificate::evaluate(g, &idx, &format!("subsets<={max_size}")) {
                return Some(c);
            }
            // next combination in lexicographic order
            let mut i = size;
            while i > 0 && idx[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    None
}

fn neighborhoods(g: &Graph) -> Option<CutCertificate> {
    let n = g.order();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut tried = std::collections::HashSet::new();
    for &v in &by_degree {
        let set = g.neighbors(v).to_vec();
        if tried.insert(set.clone()) {
            if let Some(c) = CutCertificate::evaluate(g, &set, "neighborhood") {
                return Some(c);
            }
        }
    }
    // union of neighborhoods of the low-degree class, growing by degree
    let mut low = BitSet::new(n);
    let mut union = BitSet::new(n);
    for (i, &v) in by_degree.iter().enumerate() {
        low.insert(v);
        union.union_with(g.row(v));
        let last_of_degree = by_degree.get(i + 1).is_none_or(|&w| g.degree(w) != g.degree(v));
        if last_of_degree {
            let mut s = union.clone();
            s.difference_with(low.words());
            let set: Vec<usize> = s.iter().collect();
            if tried.insert(set.clone()) {
                if let Some(c) = CutCertificate::evaluate(g, &set, "neighborhood-union") {
                    return Some(c);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{zero_divisor_graph, Graph};
    use crate::ring::{make_ring, RingKind};

    #[test]
    fn complete_graph_has_no_certificate() {
        assert_eq!(find_cut_certificate(&Graph::complete(4), &CertificateStrategy::defaults()), None);
        assert_eq!(find_cut_certificate(&Graph::cycle(7), &CertificateStrategy::defaults()), None);
    }

    #[test]
    fn star_and_unbalanced_bipartite() {
        let c = find_cut_certificate(&Graph::complete_bipartite(1, 3), &CertificateStrategy::defaults()).unwrap();
        assert_eq!(c.cut_set, vec![0]);
        assert_eq!(c.components_after, 3);
        assert!(c.validate(&Graph::complete_bipartite(1, 3)));
        let g = Graph::complete_bipartite(2, 5);
        let c = find_cut_certificate(&g, &CertificateStrategy::defaults()).unwrap();
        assert!(c.validate(&g));
    }

    #[test]
    fn gamma_z30_certificate() {
        let g = zero_divisor_graph(&make_ring(30, RingKind::Zn).unwrap());
        let c = find_cut_certificate(&g, &CertificateStrategy::defaults()).unwrap();
        assert!(c.validate(&g));
        assert!(c.cut_set.len() <= 4);
    }

    #[test]
    fn prescribed_sets_are_validated() {
        let g = Graph::complete(4);
        let bogus = CertificateStrategy::Prescribed { name: "bogus".into(), set: vec![0] };
        assert_eq!(find_cut_certificate(&g, &[bogus]), None);
        assert_eq!(CutCertificate::evaluate(&g, &[], "empty"), None);
        assert_eq!(CutCertificate::evaluate(&g, &[0, 1, 2, 3], "all"), None);
    }

    #[test]
    fn tampered_certificates_fail_validation() {
        let g = Graph::complete_bipartite(1, 3);
        let mut c = CutCertificate::evaluate(&g, &[0], "manual").unwrap();
        c.components_after = 4;
        assert!(!c.validate(&g));
    }
}
