use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{first_bit, Graph};

/// A 4-cycle `r-s-t-u-r` such that every other vertex is adjacent to `r`
/// or to `t`. A graph of order at least 5 with such a cycle has a
/// pancyclic line graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RGraphWitness {
    pub r: usize,
    pub s: usize,
    pub t: usize,
    pub u: usize,
}

impl RGraphWitness {
    pub fn validate(&self, g: &Graph) -> bool {
        let Self { r, s, t, u } = *self;
        let n = g.order();
        let four = [r, s, t, u];
        if n < 5 || four.iter().any(|&x| x >= n) {
            return false;
        }
        let distinct = (0..4).all(|i| (i + 1..4).all(|j| four[i] != four[j]));
        distinct
            && g.has_edge(r, s)
            && g.has_edge(s, t)
            && g.has_edge(t, u)
            && g.has_edge(u, r)
            && (0..n).filter(|v| !four.contains(v)).all(|v| g.has_edge(r, v) || g.has_edge(t, v))
    }
}

/// `N(r) ∪ N(t) ∪ {r, t}` is the whole vertex set.
fn dominates(g: &Graph, r: usize, t: usize) -> bool {
    let n = g.order();
    g.row(r).iter().zip(g.row(t)).enumerate().all(|(w, (a, b))| {
        let mut word = a | b;
        for x in [r, t] {
            if x / 64 == w {
                word |= 1 << (x % 64);
            }
        }
        let valid = if (w + 1) * 64 <= n { u64::MAX } else { (1u64 << (n % 64)) - 1 };
        word & valid == valid
    })
}

/// Lexicographically first `(r, s, t, u)` satisfying the definition, or
/// `None` after trying every ordered 4-cycle.
pub fn is_r_graph(g: &Graph) -> Result<Option<RGraphWitness>> {
    let n = g.order();
    if n < 5 {
        return Err(Error::OrderTooSmall { order: n, minimum: 5 });
    }
    for r in 0..n {
        for &s in g.neighbors(r) {
            for &t in g.neighbors(s) {
                if t == r || !dominates(g, r, t) {
                    continue;
                }
                let common: Vec<u64> = g
                    .row(r)
                    .iter()
                    .zip(g.row(t))
                    .enumerate()
                    .map(|(w, (a, b))| {
                        let mut word = a & b;
                        if s / 64 == w {
                            word &= !(1 << (s % 64));
                        }
                        word
                    })
                    .collect();
                if let Some(u) = first_bit(&common) {
                    return Ok(Some(RGraphWitness { r, s, t, u }));
                }
            }
        }
    }
    Ok(None)
}
