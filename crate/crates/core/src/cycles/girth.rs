use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Girth {
    /// A shortest cycle; its length is the girth.
    Cycle(Vec<usize>),
    Acyclic,
}

impl Girth {
    pub fn length(&self) -> Option<usize> {
        match self {
            Girth::Cycle(c) => Some(c.len()),
            Girth::Acyclic => None,
        }
    }
}

/// Shortest cycle by BFS from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.order();
    let mut best: Option<(usize, usize, usize, usize)> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if best.is_some_and(|(len, ..)| 2 * dist[u] + 1 >= len) {
                break;
            }
            for &v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if parent[u] != v {
                    let len = dist[u] + dist[v] + 1;
                    if best.is_none_or(|(b, ..)| len < b) {
                        best = Some((len, s, u, v));
                    }
                }
            }
        }
    }
    let Some((_, s, u, v)) = best else { return Girth::Acyclic };
    // rebuild both tree paths from the root that produced the minimum
    dist.fill(usize::MAX);
    parent.fill(usize::MAX);
    dist[s] = 0;
    let mut queue = VecDeque::from([s]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    let up = |mut x: usize| {
        let mut path = vec![x];
        while x != s {
            x = parent[x];
            path.push(x);
        }
        path
    };
    let mut cycle = up(u);
    cycle.reverse();
    let mut back = up(v);
    back.pop();
    cycle.extend(back);
    debug_assert!(g.is_cycle(&cycle));
    Girth::Cycle(cycle)
}
