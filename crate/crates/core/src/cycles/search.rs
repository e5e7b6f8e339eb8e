use serde::{Deserialize, Serialize};

use super::certificate::CutCertificate;
use crate::error::{Error, Result};
use crate::graph::{bipartition, BitSet, Graph};

/// Default node-expansion budget for one length search.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Why no cycle of some length (or no Hamiltonian cycle) exists. Every
/// variant is a complete argument, not a budget cutoff.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Refutation {
    OrderTooSmall { order: usize },
    Disconnected { components: usize },
    /// Bipartite graphs have only even cycles.
    BipartiteOddLength,
    /// A Hamiltonian cycle of a bipartite graph alternates sides.
    UnbalancedBipartite { small: usize, large: usize },
    /// Every cycle lies in one component of the 2-core and, when that
    /// component is bipartite, uses at most twice its smaller side.
    ExceedsCycleBound { bound: usize },
    CutCertificate(CutCertificate),
    /// The anchored DFS finished without finding a cycle.
    ExhaustiveSearch { expansions: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(Vec<usize>),
    NotFound(Refutation),
    BudgetExhausted { expansions: u64 },
}

/// Structural facts reused by every length query on one graph.
#[derive(Debug, Clone)]
pub(crate) struct CycleBounds {
    pub bipartite: bool,
    /// Vertices of the 2-core.
    pub core: BitSet,
    /// Longest cycle length any component of the 2-core could hold.
    pub bound: usize,
}

impl CycleBounds {
    pub fn new(g: &Graph) -> Self {
        let parts = bipartition(g);
        let core = two_core(g);
        let mut bound = 0;
        let mut unseen = core.clone();
        while let Some(s) = unseen.first() {
            let comp = crate::graph::reach(g, s, &unseen);
            unseen.difference_with(comp.words());
            let size = comp.count();
            let cap = match &parts {
                Some(p) => {
                    let small = p.small.iter().filter(|&&v| comp.contains(v)).count();
                    2 * small.min(size - small)
                }
                None => size,
            };
            bound = bound.max(if size >= 3 { cap } else { 0 });
        }
        Self { bipartite: parts.is_some(), core, bound }
    }

    /// A complete argument that no `k`-cycle exists, when a cheap one applies.
    pub fn refute(&self, k: usize) -> Option<Refutation> {
        if self.bipartite && k % 2 == 1 {
            Some(Refutation::BipartiteOddLength)
        } else if k > self.bound {
            Some(Refutation::ExceedsCycleBound { bound: self.bound })
        } else {
            None
        }
    }
}

/// Vertices surviving repeated deletion of vertices of degree < 2.
pub(crate) fn two_core(g: &Graph) -> BitSet {
    let n = g.order();
    let mut alive = BitSet::full(n);
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut stack: Vec<usize> = (0..n).filter(|&v| degree[v] < 2).collect();
    while let Some(v) = stack.pop() {
        if !alive.contains(v) {
            continue;
        }
        alive.remove(v);
        for &w in g.neighbors(v) {
            if alive.contains(w) {
                degree[w] -= 1;
                if degree[w] == 1 {
                    stack.push(w);
                }
            }
        }
    }
    alive
}

/// Searches for a simple cycle on exactly `k` vertices.
///
/// DFS anchored at the least vertex of the candidate cycle, extending only
/// through larger vertices, neighbors in ascending order. A branch is cut
/// when the static distance back to the anchor exceeds the remaining length.
/// Odd `k` on a bipartite graph and `k` beyond the 2-core bound are refuted
/// before searching.
pub fn has_cycle_of_length(g: &Graph, k: usize, budget: u64) -> Result<SearchOutcome> {
    let n = g.order();
    if k < 3 || k > n {
        return Err(Error::LengthOutOfRange { length: k, order: n });
    }
    let bounds = CycleBounds::new(g);
    Ok(search_with_bounds(g, k, budget, &bounds))
}

/// Plain anchored DFS over every vertex with no structural shortcut, so a
/// `NotFound` result always comes from a finished enumeration.
pub fn has_cycle_of_length_unpruned(g: &Graph, k: usize, budget: u64) -> Result<SearchOutcome> {
    let n = g.order();
    if k < 3 || k > n {
        return Err(Error::LengthOutOfRange { length: k, order: n });
    }
    let bounds = CycleBounds { bipartite: false, core: BitSet::full(n), bound: n };
    Ok(search_with_bounds(g, k, budget, &bounds))
}

pub(crate) fn search_with_bounds(g: &Graph, k: usize, budget: u64, bounds: &CycleBounds) -> SearchOutcome {
    if let Some(r) = bounds.refute(k) {
        return SearchOutcome::NotFound(r);
    }
    let parts = if bounds.bipartite { bipartition(g) } else { None };
    let mut search = AnchoredSearch::new(g, k, budget);
    for anchor in bounds.core.iter() {
        let mut allowed = bounds.core.clone();
        for v in 0..anchor {
            allowed.remove(v);
        }
        let comp = crate::graph::reach(g, anchor, &allowed);
        let size = comp.count();
        if size < k {
            continue;
        }
        if let Some(p) = &parts {
            let small = p.small.iter().filter(|&&v| comp.contains(v)).count();
            if 2 * small.min(size - small) < k {
                continue;
            }
        }
        match search.run(anchor, &comp) {
            Step::Found(c) => return SearchOutcome::Found(c),
            Step::Exhausted => return SearchOutcome::BudgetExhausted { expansions: search.expansions },
            Step::Done => {}
        }
    }
    SearchOutcome::NotFound(Refutation::ExhaustiveSearch { expansions: search.expansions })
}

enum Step {
    Found(Vec<usize>),
    Exhausted,
    Done,
}

struct AnchoredSearch<'g> {
    g: &'g Graph,
    k: usize,
    budget: u64,
    expansions: u64,
}

impl<'g> AnchoredSearch<'g> {
    fn new(g: &'g Graph, k: usize, budget: u64) -> Self {
        Self { g, k, budget, expansions: 0 }
    }

    fn run(&mut self, anchor: usize, comp: &BitSet) -> Step {
        let g = self.g;
        let k = self.k;
        let dist = distances_within(g, anchor, comp);
        let mut path = vec![anchor];
        let mut on_path = BitSet::new(g.order());
        on_path.insert(anchor);
        // next neighbor position to try, per path depth
        let mut cursor = vec![0usize];
        while let Some(pos) = cursor.last_mut() {
            let u = *path.last().unwrap();
            let depth = path.len();
            let nbrs = g.neighbors(u);
            let mut advanced = false;
            while *pos < nbrs.len() {
                let w = nbrs[*pos];
                *pos += 1;
                if w <= anchor || !comp.contains(w) || on_path.contains(w) {
                    continue;
                }
                if depth + 1 == k {
                    // close the cycle; second vertex below the last one kills reflections
                    if g.has_edge(w, anchor) && path[1] < w {
                        path.push(w);
                        return Step::Found(path);
                    }
                    continue;
                }
                if dist[w] > k - depth {
                    continue;
                }
                self.expansions += 1;
                if self.expansions > self.budget {
                    return Step::Exhausted;
                }
                path.push(w);
                on_path.insert(w);
                cursor.push(0);
                advanced = true;
                break;
            }
            if !advanced {
                cursor.pop();
                let v = path.pop().unwrap();
                on_path.remove(v);
            }
        }
        Step::Done
    }
}

/// BFS distances from `s` inside `alive`.
fn distances_within(g: &Graph, s: usize, alive: &BitSet) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.order()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if alive.contains(v) && dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    dist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{zero_divisor_graph, Graph};
    use crate::ring::{make_ring, RingKind};

    fn found(g: &Graph, k: usize) -> bool {
        match has_cycle_of_length(g, k, DEFAULT_BUDGET).unwrap() {
            SearchOutcome::Found(c) => {
                assert_eq!(c.len(), k);
                assert!(g.is_cycle(&c));
                true
            }
            SearchOutcome::NotFound(_) => false,
            SearchOutcome::BudgetExhausted { .. } => panic!("budget exhausted on a tiny graph"),
        }
    }

    #[test]
    fn complete_graph_has_triangles() {
        assert!(found(&Graph::complete(4), 3));
        assert!(found(&Graph::complete(4), 4));
    }

    #[test]
    fn k_2_4_has_no_six_cycle() {
        let g = Graph::complete_bipartite(2, 4);
        assert!(found(&g, 4));
        assert_eq!(
            has_cycle_of_length(&g, 6, DEFAULT_BUDGET).unwrap(),
            SearchOutcome::NotFound(Refutation::ExceedsCycleBound { bound: 4 })
        );
        assert_eq!(
            has_cycle_of_length(&g, 5, DEFAULT_BUDGET).unwrap(),
            SearchOutcome::NotFound(Refutation::BipartiteOddLength)
        );
    }

    #[test]
    fn gamma_z6_has_no_triangle() {
        let g = zero_divisor_graph(&make_ring(6, RingKind::Zn).unwrap());
        assert!(!found(&g, 3));
    }

    #[test]
    fn exhaustive_refutation_on_petersen() {
        // the Petersen graph has cycles of lengths 5, 6, 8, 9 only
        let outer: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<_> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<_> = (0..5).map(|i| (i + 5, (i + 2) % 5 + 5)).collect();
        let edges: Vec<_> = outer.into_iter().chain(spokes).chain(inner).collect();
        let g = Graph::with_order(10, &edges).unwrap();
        let present: Vec<usize> = (3..=10).filter(|&k| found(&g, k)).collect();
        assert_eq!(present, vec![5, 6, 8, 9]);
        assert!(matches!(
            has_cycle_of_length(&g, 10, DEFAULT_BUDGET).unwrap(),
            SearchOutcome::NotFound(Refutation::ExhaustiveSearch { .. })
        ));
    }

    #[test]
    fn unpruned_search_agrees() {
        let g = Graph::complete_bipartite(2, 4);
        assert!(matches!(
            has_cycle_of_length_unpruned(&g, 6, DEFAULT_BUDGET).unwrap(),
            SearchOutcome::NotFound(Refutation::ExhaustiveSearch { .. })
        ));
        assert!(matches!(has_cycle_of_length_unpruned(&g, 4, DEFAULT_BUDGET).unwrap(), SearchOutcome::Found(_)));
    }

    #[test]
    fn out_of_range_lengths() {
        let g = Graph::complete(4);
        assert!(has_cycle_of_length(&g, 2, 10).is_err());
        assert!(has_cycle_of_length(&g, 5, 10).is_err());
    }

    #[test]
    fn budget_is_reported() {
        let g = Graph::cycle(12);
        assert_eq!(has_cycle_of_length(&g, 12, 3).unwrap(), SearchOutcome::BudgetExhausted { expansions: 4 });
    }
}
