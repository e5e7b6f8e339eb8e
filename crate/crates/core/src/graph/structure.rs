use serde::{Deserialize, Serialize};

use super::{BitSet, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum StructuralClass {
    CompleteK(usize),
    /// Parts `(a, b)` with `2 <= a <= b`.
    CompleteBipartite(usize, usize),
    /// `K_{1,k}` with `k >= 2`.
    Star(usize),
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Diameter {
    Finite(usize),
    Unreachable,
}

/// Two-coloring of a bipartite graph, smaller color class first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub small: Vec<usize>,
    pub large: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphStats {
    pub order: usize,
    pub size: usize,
    pub min_degree: usize,
    pub max_degree: usize,
    pub pendant_count: usize,
    pub component_count: usize,
    pub diameter: Diameter,
    pub bipartite: Option<Bipartition>,
}

pub fn stats(g: &Graph) -> GraphStats {
    let degrees: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    GraphStats {
        order: g.order(),
        size: g.size(),
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        max_degree: degrees.iter().copied().max().unwrap_or(0),
        pendant_count: degrees.iter().filter(|&&d| d == 1).count(),
        component_count: component_indices(g).len(),
        diameter: diameter(g),
        bipartite: bipartition(g),
    }
}

/// Exact recognition of complete, complete bipartite and star graphs.
pub fn recognize(g: &Graph) -> StructuralClass {
    let n = g.order();
    if g.size() == n * n.saturating_sub(1) / 2 {
        return StructuralClass::CompleteK(n);
    }
    let Some(parts) = bipartition(g) else {
        return StructuralClass::Other;
    };
    let (a, b) = (parts.small.len(), parts.large.len());
    if a == 0 || g.size() != a * b {
        return StructuralClass::Other;
    }
    if a == 1 {
        StructuralClass::Star(b)
    } else {
        StructuralClass::CompleteBipartite(a, b)
    }
}

/// BFS 2-coloring; `None` when an odd cycle exists.
pub fn bipartition(g: &Graph) -> Option<Bipartition> {
    let n = g.order();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &v in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    _ => {}
                }
            }
        }
    }
    let (first, second): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| color[v] == Some(false));
    Some(if second.len() < first.len() {
        Bipartition { small: second, large: first }
    } else {
        Bipartition { small: first, large: second }
    })
}

/// Vertex sets of connected components, each ascending, ordered by least vertex.
pub(crate) fn component_indices(g: &Graph) -> Vec<Vec<usize>> {
    components_within(g, &BitSet::full(g.order()))
}

/// Components of the subgraph induced by `alive`.
fn components_within(g: &Graph, alive: &BitSet) -> Vec<Vec<usize>> {
    let mut unseen = alive.clone();
    let mut out = Vec::new();
    while let Some(s) = unseen.first() {
        let reached = reach(g, s, &unseen);
        unseen.difference_with(reached.words());
        out.push(reached.iter().collect());
    }
    out
}

/// Number of components of `g - removed`.
pub(crate) fn count_components_without(g: &Graph, removed: &BitSet) -> usize {
    let mut unseen = BitSet::full(g.order());
    unseen.difference_with(removed.words());
    let mut count = 0;
    while let Some(s) = unseen.first() {
        let reached = reach(g, s, &unseen);
        unseen.difference_with(reached.words());
        count += 1;
    }
    count
}

/// Vertices reachable from `s` inside `alive` (which must contain `s`).
pub(crate) fn reach(g: &Graph, s: usize, alive: &BitSet) -> BitSet {
    let mut seen = BitSet::new(g.order());
    seen.insert(s);
    let mut frontier = vec![s];
    while let Some(u) = frontier.pop() {
        let mut fresh = alive.clone();
        fresh.intersect_with(g.row(u));
        fresh.difference_with(seen.words());
        seen.union_with(fresh.words());
        frontier.extend(fresh.iter());
    }
    seen
}

pub fn connected_components(g: &Graph) -> Vec<Graph> {
    component_indices(g).iter().map(|c| g.induced(c)).collect()
}

/// BFS distances from `s` (`usize::MAX` when unreachable).
fn distances_from(g: &Graph, s: usize) -> Vec<usize> {
    let n = g.order();
    let mut dist = vec![usize::MAX; n];
    let mut unseen = BitSet::full(n);
    unseen.remove(s);
    dist[s] = 0;
    let mut frontier = BitSet::new(n);
    frontier.insert(s);
    let mut level = 0;
    while !frontier.is_empty() {
        level += 1;
        let mut next = BitSet::new(n);
        for u in frontier.iter() {
            next.union_with(g.row(u));
        }
        next.intersect_with(unseen.words());
        for v in next.iter() {
            dist[v] = level;
        }
        unseen.difference_with(next.words());
        frontier = next;
    }
    dist
}

pub fn diameter(g: &Graph) -> Diameter {
    let mut best = 0;
    for s in 0..g.order() {
        for d in distances_from(g, s) {
            if d == usize::MAX {
                return Diameter::Unreachable;
            }
            best = best.max(d);
        }
    }
    Diameter::Finite(best)
}

/// Bridges `(u, v)` with `u < v`, via low-link DFS.
pub fn bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut timer = 0;
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent, next neighbor position)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        while let Some(&mut (u, parent, ref mut pos)) = stack.last_mut() {
            if let Some(&v) = g.neighbors(u).get(*pos) {
                *pos += 1;
                if v == parent {
                    continue;
                }
                if disc[v] == usize::MAX {
                    disc[v] = timer;
                    low[v] = timer;
                    timer += 1;
                    stack.push((v, u, 0));
                } else {
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[u]);
                    if low[u] > disc[parent] {
                        out.push((parent.min(u), parent.max(u)));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

/// First vertex whose deletion disconnects a connected graph, found by
/// deleting each vertex in turn.
pub fn cut_vertex(g: &Graph) -> Option<usize> {
    let n = g.order();
    (0..n).find(|&v| {
        let mut removed = BitSet::new(n);
        removed.insert(v);
        n > 1 && count_components_without(g, &removed) > 1
    })
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.order() >= 3 && component_indices(g).len() == 1 && cut_vertex(g).is_none()
}
