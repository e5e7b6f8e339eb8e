//! Literal evaluation of sufficient conditions for Hamiltonian or pancyclic
//! behaviour. Each checker reports whether the hypothesis holds; the
//! conclusion is decided elsewhere.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bridges, component_indices, cut_vertex, diameter, Diameter, Graph};

/// Degree-sum condition for pancyclic line graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LinePancyclicCondition {
    pub holds: bool,
    pub order: usize,
    /// Bridges found; the condition requires none.
    pub bridges: Vec<(usize, usize)>,
    /// Edge minimising `deg(u) + deg(v)`.
    pub min_edge: Option<(usize, usize)>,
    pub min_degree_sum: Option<usize>,
    /// `deg(u) + deg(v) >= (2n + 1) / 3` on every edge.
    pub degree_sums_ok: bool,
    /// The graph is `C_4` or `C_5`.
    pub excluded_cycle: bool,
}

/// Connected, order at least 4, no bridge, `deg(u) + deg(v) >= (2n+1)/3` on
/// every edge, and not `C_4` or `C_5`.
pub fn check_line_pancyclic_condition(g: &Graph) -> Result<LinePancyclicCondition> {
    let n = g.order();
    if n < 4 {
        return Err(Error::OrderTooSmall { order: n, minimum: 4 });
    }
    if component_indices(g).len() != 1 {
        return Err(Error::Disconnected);
    }
    let bridges = bridges(g);
    let min = g.edges().into_iter().map(|(u, v)| (g.degree(u) + g.degree(v), (u, v))).min();
    let degree_sums_ok = min.is_some_and(|(sum, _)| 3 * sum >= 2 * n + 1);
    let excluded_cycle = (n == 4 || n == 5) && g.size() == n && (0..n).all(|v| g.degree(v) == 2);
    Ok(LinePancyclicCondition {
        holds: bridges.is_empty() && degree_sums_ok && !excluded_cycle,
        order: n,
        bridges,
        min_edge: min.map(|(_, e)| e),
        min_degree_sum: min.map(|(s, _)| s),
        degree_sums_ok,
        excluded_cycle,
    })
}

/// Diameter at most 2 and order at least 4.
pub fn check_diameter_condition(g: &Graph) -> bool {
    g.order() >= 4 && matches!(diameter(g), Diameter::Finite(d) if d <= 2)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanCondition {
    pub holds: bool,
    pub order: usize,
    /// Pairs at distance 2 examined.
    pub pairs_checked: usize,
    /// Pairs at distance 2 with `2 * max(deg) < n`.
    pub violations: usize,
    pub first_violation: Option<FanViolation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanViolation {
    pub u: usize,
    pub v: usize,
    pub degree_u: usize,
    pub degree_v: usize,
}

/// For a 2-connected graph on more than 3 vertices: every pair at distance
/// exactly 2 has `max(deg(u), deg(v)) >= n/2`.
pub fn check_fan_condition(g: &Graph) -> Result<FanCondition> {
    let n = g.order();
    if n <= 3 {
        return Err(Error::OrderTooSmall { order: n, minimum: 4 });
    }
    if component_indices(g).len() != 1 {
        return Err(Error::Disconnected);
    }
    if let Some(cut_vertex) = cut_vertex(g) {
        return Err(Error::NotTwoConnected { cut_vertex });
    }
    let words = g.row(0).len();
    let mut report = FanCondition { holds: true, order: n, pairs_checked: 0, violations: 0, first_violation: None };
    for u in 0..n {
        // second neighborhood: reachable in two steps, not adjacent, not u
        let mut two = vec![0u64; words];
        for &w in g.neighbors(u) {
            for (acc, x) in two.iter_mut().zip(g.row(w)) {
                *acc |= x;
            }
        }
        for (acc, x) in two.iter_mut().zip(g.row(u)) {
            *acc &= !x;
        }
        two[u / 64] &= !(1 << (u % 64));
        for v in crate::graph::iter_bits(&two).filter(|&v| v > u) {
            report.pairs_checked += 1;
            let (du, dv) = (g.degree(u), g.degree(v));
            if 2 * du.max(dv) < n {
                report.violations += 1;
                report.first_violation.get_or_insert(FanViolation { u, v, degree_u: du, degree_v: dv });
            }
        }
    }
    report.holds = report.violations == 0;
    Ok(report)
}

/// `|E| >= n^2 / 4`.
pub fn check_bondy_edge_count(g: &Graph) -> bool {
    4 * g.size() >= g.order() * g.order()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complement, zero_divisor_graph};
    use crate::ring::{make_ring, RingKind};

    fn gamma(n: u64, kind: RingKind) -> Graph {
        zero_divisor_graph(&make_ring(n, kind).unwrap())
    }

    #[test]
    fn line_condition_examples() {
        let c = check_line_pancyclic_condition(&gamma(25, RingKind::Zn)).unwrap();
        assert!(c.holds);
        assert_eq!(c.min_degree_sum, Some(6));
        let c = check_line_pancyclic_condition(&gamma(5, RingKind::ZnGaussian)).unwrap();
        assert!(c.holds);
        assert_eq!(c.min_degree_sum, Some(8));
        let c = check_line_pancyclic_condition(&Graph::cycle(4)).unwrap();
        assert!(c.excluded_cycle && !c.holds);
        let c = check_line_pancyclic_condition(&Graph::path(5)).unwrap();
        assert_eq!(c.bridges.len(), 4);
        assert!(!c.holds);
        assert!(check_line_pancyclic_condition(&Graph::complete(3)).is_err());
    }

    #[test]
    fn diameter_and_bondy() {
        assert!(check_diameter_condition(&gamma(15, RingKind::Zn)));
        assert!(!check_diameter_condition(&Graph::path(5)));
        assert!(check_bondy_edge_count(&Graph::complete_bipartite(4, 4)));
        assert!(!check_bondy_edge_count(&Graph::cycle(6)));
    }

    #[test]
    fn fan_refuses_graphs_with_a_cut_vertex() {
        let star = Graph::complete_bipartite(1, 4);
        assert_eq!(check_fan_condition(&star), Err(Error::NotTwoConnected { cut_vertex: 0 }));
        assert!(check_fan_condition(&complement(&gamma(5, RingKind::ZnGaussian))).is_err());
        let c = check_fan_condition(&Graph::cycle(6)).unwrap();
        assert!(!c.holds);
        assert_eq!(c.pairs_checked, 6);
        assert!(check_fan_condition(&Graph::complete_bipartite(3, 3)).unwrap().holds);
    }
}
