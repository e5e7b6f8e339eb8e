//! Constructive heuristics that produce cycle witnesses quickly on dense
//! graphs. Nothing here ever refutes a length; a miss just falls through to
//! the exhaustive search.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{first_bit, BitSet, Graph};

/// Cycle under modification with O(1) membership.
struct WorkingCycle<'g> {
    g: &'g Graph,
    vertices: Vec<usize>,
    on: BitSet,
}

impl<'g> WorkingCycle<'g> {
    fn new(g: &'g Graph, start: &[usize]) -> Self {
        Self { g, vertices: start.to_vec(), on: BitSet::from_indices(g.order(), start.iter().copied()) }
    }

    fn len(&self) -> usize {
        self.vertices.len()
    }

    fn at(&self, i: usize) -> usize {
        self.vertices[i % self.vertices.len()]
    }

    /// Outside vertices adjacent to both `a` and `b`, as words.
    fn common_outside(&self, a: usize, b: usize) -> Vec<u64> {
        self.g
            .row(a)
            .iter()
            .zip(self.g.row(b))
            .zip(self.on.words())
            .map(|((x, y), o)| x & y & !o)
            .collect()
    }

    /// `+1`: an outside vertex adjacent to two consecutive cycle vertices.
    fn insert_one(&mut self, from: usize) -> bool {
        let k = self.len();
        for step in 0..k {
            let i = (from + step) % k;
            let (a, b) = (self.at(i), self.at(i + 1));
            if let Some(w) = first_bit(&self.common_outside(a, b)) {
                self.vertices.insert(i + 1, w);
                self.on.insert(w);
                return true;
            }
        }
        false
    }

    /// `+2`: outside `w ~ x` with `a ~ w` and `x ~ b` for consecutive `a, b`.
    fn insert_two(&mut self) -> bool {
        let g = self.g;
        let k = self.len();
        for i in 0..k {
            let (a, b) = (self.at(i), self.at(i + 1));
            for &w in g.neighbors(a) {
                if self.on.contains(w) {
                    continue;
                }
                let x = g
                    .row(w)
                    .iter()
                    .zip(g.row(b))
                    .zip(self.on.words())
                    .map(|((p, q), o)| p & q & !o)
                    .collect::<Vec<u64>>();
                if let Some(x) = first_bit(&x) {
                    self.vertices.splice(i + 1..i + 1, [w, x]);
                    self.on.insert(w);
                    self.on.insert(x);
                    return true;
                }
            }
        }
        false
    }

    /// `+1` by exchange: replace `c[i+1]` with an outside `w` adjacent to
    /// `c[i]` and `c[i+2]`, then re-insert `c[i+1]` between two consecutive
    /// vertices elsewhere.
    fn exchange(&mut self) -> bool {
        let k = self.len();
        if k < 4 {
            return false;
        }
        for i in 0..k {
            let (a, mid, d) = (self.at(i), self.at(i + 1), self.at(i + 2));
            let candidates = self.common_outside(a, d);
            for w in crate::graph::iter_bits(&candidates) {
                let mid_pos = (i + 1) % k;
                let mut next = self.vertices.clone();
                next[mid_pos] = w;
                let kk = next.len();
                let slot =
                    (0..kk).find(|&j| self.g.has_edge(next[j], mid) && self.g.has_edge(next[(j + 1) % kk], mid));
                if let Some(j) = slot {
                    next.insert(j + 1, mid);
                    self.on.insert(w);
                    self.vertices = next;
                    return true;
                }
            }
        }
        false
    }

    /// `-1`: drop a vertex whose two cycle neighbors are adjacent.
    fn drop_one(&mut self) -> bool {
        let k = self.len();
        if k <= 3 {
            return false;
        }
        for i in 0..k {
            let (p, v, q) = (self.at(i + k - 1), self.at(i), self.at(i + 1));
            if self.g.has_edge(p, q) {
                self.vertices.remove(i);
                self.on.remove(v);
                return true;
            }
        }
        false
    }

    /// Shortest sub-cycle cut off by a chord, when no single drop applies.
    fn chord_shrink(&mut self) -> bool {
        let k = self.len();
        let mut best: Option<(usize, usize)> = None;
        for i in 0..k {
            for gap in 2..k - 1 {
                if best.is_some_and(|(_, bg)| gap >= bg) {
                    break;
                }
                if self.g.has_edge(self.at(i), self.at(i + gap)) {
                    best = Some((i, gap));
                    break;
                }
            }
        }
        // keep the larger side of the chord
        let Some((i, gap)) = best else { return false };
        let keep: Vec<usize> = (0..=k - gap).map(|t| self.at(i + gap + t)).collect();
        for &v in &self.vertices {
            self.on.remove(v);
        }
        for &v in &keep {
            self.on.insert(v);
        }
        self.vertices = keep;
        true
    }
}

/// Grows from `start`, recording one witness per length reached.
pub(crate) fn grow(g: &Graph, start: &[usize], out: &mut BTreeMap<usize, Vec<usize>>) {
    let mut c = WorkingCycle::new(g, start);
    out.entry(c.len()).or_insert_with(|| c.vertices.clone());
    let mut from = 0;
    loop {
        let progressed = if c.insert_one(from) {
            from += 1;
            true
        } else {
            c.exchange() || c.insert_two()
        };
        if !progressed {
            break;
        }
        out.entry(c.len()).or_insert_with(|| c.vertices.clone());
    }
}

/// Shrinks from `start` down to a triangle where possible.
pub(crate) fn shrink(g: &Graph, start: &[usize], out: &mut BTreeMap<usize, Vec<usize>>) {
    let mut c = WorkingCycle::new(g, start);
    out.entry(c.len()).or_insert_with(|| c.vertices.clone());
    while c.len() > 3 && (c.drop_one() || c.chord_shrink()) {
        out.entry(c.len()).or_insert_with(|| c.vertices.clone());
    }
}

/// Rotation-extension search for a Hamiltonian cycle inside `alive`.
/// Deterministic for a given `seed`; gives up after `max_steps` moves.
pub(crate) fn rotation_extension(g: &Graph, alive: &BitSet, seed: u64, max_steps: u64) -> Option<Vec<usize>> {
    let target = alive.count();
    if target < 3 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let start = alive.first()?;
    let mut path = vec![start];
    let mut on = BitSet::new(g.order());
    on.insert(start);
    let mut pos = vec![usize::MAX; g.order()];
    pos[start] = 0;
    let mut steps = 0u64;
    let free_degree = |v: usize, on: &BitSet| -> usize {
        g.row(v).iter().zip(alive.words()).zip(on.words()).map(|((r, a), o)| (r & a & !o).count_ones() as usize).sum()
    };
    while steps < max_steps {
        steps += 1;
        let end = *path.last().unwrap();
        // extend: prefer the free neighbor with the fewest free neighbors
        let next = g
            .neighbors(end)
            .iter()
            .copied()
            .filter(|&w| alive.contains(w) && !on.contains(w))
            .min_by_key(|&w| (free_degree(w, &on), w));
        if let Some(w) = next {
            pos[w] = path.len();
            path.push(w);
            on.insert(w);
            if path.len() == target {
                if let Some(cycle) = close(g, &path, &pos) {
                    return Some(cycle);
                }
            } else {
                continue;
            }
        }
        // rotate around a random neighbor of the end
        let pivots: Vec<usize> = g
            .neighbors(end)
            .iter()
            .copied()
            .filter(|&w| on.contains(w) && pos[w] + 1 < path.len() - 1)
            .collect();
        if pivots.is_empty() {
            if rng.gen_bool(0.5) || path.len() == 1 {
                path.reverse();
                for (i, &v) in path.iter().enumerate() {
                    pos[v] = i;
                }
                continue;
            }
            // restart from a different vertex
            for &v in &path {
                on.remove(v);
                pos[v] = usize::MAX;
            }
            let fresh: Vec<usize> = alive.iter().collect();
            let s = *fresh.choose(&mut rng).unwrap();
            path = vec![s];
            on.insert(s);
            pos[s] = 0;
            continue;
        }
        let pivot = *pivots.choose(&mut rng).unwrap();
        let i = pos[pivot];
        path[i + 1..].reverse();
        for (j, &v) in path.iter().enumerate().skip(i + 1) {
            pos[v] = j;
        }
    }
    None
}

/// A cycle of length `k` inside `alive`: deletes `|alive| - k` random
/// vertices and runs rotation-extension on the rest, `attempts` times.
pub(crate) fn deletion_search(g: &Graph, alive: &BitSet, k: usize, seed: u64, attempts: usize) -> Option<Vec<usize>> {
    let pool: Vec<usize> = alive.iter().collect();
    let drop = pool.len().checked_sub(k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ k as u64);
    for attempt in 0..attempts as u64 {
        let mut keep = alive.clone();
        for &v in pool.choose_multiple(&mut rng, drop) {
            keep.remove(v);
        }
        if let Some(c) = rotation_extension(g, &keep, seed.wrapping_add(attempt), 20 * (k * k) as u64) {
            return Some(c);
        }
    }
    None
}

/// Closes a Hamiltonian path into a cycle directly or by one rotation.
fn close(g: &Graph, path: &[usize], pos: &[usize]) -> Option<Vec<usize>> {
    let (first, last) = (path[0], *path.last().unwrap());
    if g.has_edge(first, last) {
        return Some(path.to_vec());
    }
    // path[i] ~ last and path[i+1] ~ first closes first..path[i], last..path[i+1]
    for &w in g.neighbors(last) {
        let i = pos[w];
        if i == usize::MAX || i + 1 >= path.len() - 1 {
            continue;
        }
        if g.has_edge(path[i + 1], first) {
            let mut cycle = path[..=i].to_vec();
            cycle.extend(path[i + 1..].iter().rev());
            return Some(cycle);
        }
    }
    None
}
