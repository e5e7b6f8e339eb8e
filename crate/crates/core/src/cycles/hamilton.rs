use serde::{Deserialize, Serialize};

use super::certificate::{find_cut_certificate, CertificateStrategy};
use super::grow::rotation_extension;
use super::search::{search_with_bounds, CycleBounds, Refutation, SearchOutcome};
use crate::graph::{bipartition, component_indices, recognize, BitSet, Graph, StructuralClass};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum HamiltonVerdict {
    Yes { cycle: Vec<usize> },
    No { reason: Refutation },
    Undecided { expansions: u64 },
}

impl HamiltonVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, HamiltonVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, HamiltonVerdict::No { .. })
    }
}

pub(crate) enum HamiltonAttempt {
    Found(Vec<usize>),
    Refuted(Refutation),
    Unknown,
}

/// Decides Hamiltonicity with the default certificate strategies.
pub fn is_hamiltonian(g: &Graph, budget: u64) -> HamiltonVerdict {
    is_hamiltonian_with(g, budget, &CertificateStrategy::defaults())
}

/// Order of attempts: structural refutations, rotation-extension on dense
/// graphs, cut certificates from `strategies`, rotation-extension on the
/// rest, then the exhaustive anchored search.
pub fn is_hamiltonian_with(g: &Graph, budget: u64, strategies: &[CertificateStrategy]) -> HamiltonVerdict {
    match attempt(g, budget, strategies) {
        (HamiltonAttempt::Found(cycle), _) => HamiltonVerdict::Yes { cycle },
        (HamiltonAttempt::Refuted(reason), _) => HamiltonVerdict::No { reason },
        (HamiltonAttempt::Unknown, expansions) => HamiltonVerdict::Undecided { expansions },
    }
}

pub(crate) fn hamiltonian_attempt(g: &Graph, budget: u64) -> HamiltonAttempt {
    attempt(g, budget, &CertificateStrategy::defaults()).0
}

/// Refutations that need no search at all.
pub(crate) fn structural_refutation(g: &Graph) -> Option<Refutation> {
    let n = g.order();
    if n < 3 {
        return Some(Refutation::OrderTooSmall { order: n });
    }
    let components = component_indices(g).len();
    if components > 1 {
        return Some(Refutation::Disconnected { components });
    }
    if let Some(p) = bipartition(g) {
        if p.small.len() != p.large.len() {
            return Some(Refutation::UnbalancedBipartite { small: p.small.len(), large: p.large.len() });
        }
    }
    CycleBounds::new(g).refute(n)
}

fn attempt(g: &Graph, budget: u64, strategies: &[CertificateStrategy]) -> (HamiltonAttempt, u64) {
    let n = g.order();
    if let Some(r) = structural_refutation(g) {
        return (HamiltonAttempt::Refuted(r), 0);
    }
    match recognize(g) {
        StructuralClass::CompleteK(_) => return (HamiltonAttempt::Found((0..n).collect()), 0),
        StructuralClass::CompleteBipartite(..) => {
            let p = bipartition(g).expect("complete bipartite graphs are bipartite");
            let cycle = p.small.iter().zip(&p.large).flat_map(|(&a, &b)| [a, b]).collect();
            return (HamiltonAttempt::Found(cycle), 0);
        }
        _ => {}
    }
    let all = BitSet::full(n);
    let steps = 200 * (n as u64) * (n as u64);
    let min_degree = (0..n).map(|v| g.degree(v)).min().unwrap_or(0);
    let dense = 2 * min_degree >= n;
    if dense {
        if let Some(c) = rotation_extension(g, &all, 0x5eed, steps) {
            return (HamiltonAttempt::Found(c), 0);
        }
    }
    if let Some(cert) = find_cut_certificate(g, strategies) {
        return (HamiltonAttempt::Refuted(Refutation::CutCertificate(cert)), 0);
    }
    if !dense {
        if let Some(c) = rotation_extension(g, &all, 0x5eed, steps) {
            return (HamiltonAttempt::Found(c), 0);
        }
    }
    if budget == 0 {
        return (HamiltonAttempt::Unknown, 0);
    }
    match search_with_bounds(g, n, budget, &CycleBounds::new(g)) {
        SearchOutcome::Found(c) => (HamiltonAttempt::Found(c), 0),
        SearchOutcome::NotFound(r) => (HamiltonAttempt::Refuted(r), 0),
        SearchOutcome::BudgetExhausted { expansions } => (HamiltonAttempt::Unknown, expansions),
    }
}
