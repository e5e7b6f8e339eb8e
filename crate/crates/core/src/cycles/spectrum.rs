use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::girth::{girth, Girth};
use super::grow::{deletion_search, grow, rotation_extension, shrink};
use super::certificate::{find_cut_certificate, CertificateStrategy};
use super::hamilton::{hamiltonian_attempt, structural_refutation, HamiltonAttempt};
use super::search::{search_with_bounds, CycleBounds, Refutation, SearchOutcome};
use crate::error::{Error, Result};
use crate::graph::{bipartition, recognize, Graph, StructuralClass};

/// Longest length tried by vertex deletion.
const DELETION_LIMIT: usize = 600;
const DELETION_ATTEMPTS: usize = 24;

/// Cycle lengths realised in a graph, with a witness for each present length
/// and the argument for each refuted one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleSpectrum {
    pub order: usize,
    pub present: BTreeSet<usize>,
    pub witnesses: BTreeMap<usize, Vec<usize>>,
    pub refuted: BTreeMap<usize, Refutation>,
    /// Lengths whose search ran out of budget.
    pub undecided: BTreeSet<usize>,
    /// False when any examined length is undecided.
    pub exhaustive: bool,
}

impl CycleSpectrum {
    fn empty(order: usize) -> Self {
        Self {
            order,
            present: BTreeSet::new(),
            witnesses: BTreeMap::new(),
            refuted: BTreeMap::new(),
            undecided: BTreeSet::new(),
            exhaustive: true,
        }
    }

    /// Records `cycle` if it is a valid cycle of `g` and its length is not
    /// yet witnessed. Returns whether it was accepted.
    pub fn insert_witness(&mut self, g: &Graph, cycle: Vec<usize>) -> bool {
        let k = cycle.len();
        if !g.is_cycle(&cycle) || self.present.contains(&k) {
            return false;
        }
        self.present.insert(k);
        self.undecided.remove(&k);
        self.witnesses.insert(k, cycle);
        true
    }

    fn refute(&mut self, k: usize, why: Refutation) {
        if !self.present.contains(&k) {
            self.refuted.insert(k, why);
        }
    }

    fn is_settled(&self, k: usize) -> bool {
        self.present.contains(&k) || self.refuted.contains_key(&k)
    }

    /// Every witness is a valid cycle of its stated length in `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        self.witnesses.iter().all(|(&k, c)| c.len() == k && g.is_cycle(c))
            && self.present.iter().all(|k| self.witnesses.contains_key(k))
            && self.present.iter().all(|&k| (3..=self.order).contains(&k))
    }
}

/// Full spectrum over `3..=order`.
pub fn cycle_spectrum(g: &Graph, budget: u64) -> CycleSpectrum {
    let lengths: Vec<usize> = (3..=g.order()).collect();
    cycle_spectrum_for(g, &lengths, budget).expect("lengths are in range")
}

/// Spectrum restricted to `lengths`; other lengths are left unexamined.
pub fn cycle_spectrum_for(g: &Graph, lengths: &[usize], budget: u64) -> Result<CycleSpectrum> {
    let n = g.order();
    if let Some(&k) = lengths.iter().find(|&&k| k < 3 || k > n) {
        return Err(Error::LengthOutOfRange { length: k, order: n });
    }
    let wanted: BTreeSet<usize> = lengths.iter().copied().collect();
    let mut spectrum = CycleSpectrum::empty(n);
    if wanted.is_empty() {
        return Ok(spectrum);
    }
    if closed_form(g, &wanted, &mut spectrum) {
        return Ok(spectrum);
    }

    let bounds = CycleBounds::new(g);
    for &k in &wanted {
        if let Some(r) = bounds.refute(k) {
            spectrum.refute(k, r);
        }
    }
    let open = |s: &CycleSpectrum| wanted.iter().copied().filter(|&k| !s.is_settled(k)).collect::<Vec<_>>();
    if open(&spectrum).is_empty() {
        return Ok(spectrum);
    }

    constructive(g, &bounds, &mut spectrum);
    spectrum.witnesses.retain(|k, _| wanted.contains(k));
    spectrum.present.retain(|k| wanted.contains(k));

    if wanted.contains(&n) && !spectrum.is_settled(n) {
        match hamiltonian_attempt(g, budget) {
            HamiltonAttempt::Found(c) => {
                spectrum.insert_witness(g, c);
            }
            HamiltonAttempt::Refuted(r) => spectrum.refute(n, r),
            HamiltonAttempt::Unknown => {}
        }
    }

    near_hamiltonian(g, &bounds, &open(&spectrum), &mut spectrum);

    let remaining = open(&spectrum);
    let results: Vec<(usize, SearchOutcome)> =
        remaining.par_iter().map(|&k| (k, search_with_bounds(g, k, budget, &bounds))).collect();
    for (k, outcome) in results {
        match outcome {
            SearchOutcome::Found(c) => {
                spectrum.insert_witness(g, c);
            }
            SearchOutcome::NotFound(r) => spectrum.refute(k, r),
            SearchOutcome::BudgetExhausted { .. } => {
                spectrum.undecided.insert(k);
            }
        }
    }
    spectrum.exhaustive = spectrum.undecided.is_empty();
    Ok(spectrum)
}

/// Long open lengths by vertex deletion plus rotation-extension, longest
/// first, shrinking every new cycle to fill in shorter lengths.
fn near_hamiltonian(g: &Graph, bounds: &CycleBounds, open: &[usize], spectrum: &mut CycleSpectrum) {
    let core = bounds.core.count();
    for &k in open.iter().rev() {
        if spectrum.is_settled(k) || 2 * k <= core || k >= core || k > DELETION_LIMIT {
            continue;
        }
        if let Some(c) = deletion_search(g, &bounds.core, k, 0x5eed, DELETION_ATTEMPTS) {
            let mut found = BTreeMap::new();
            shrink(g, &c, &mut found);
            found.insert(c.len(), c);
            for (_, c) in found {
                if open.contains(&c.len()) && !spectrum.is_settled(c.len()) {
                    spectrum.insert_witness(g, c);
                }
            }
        }
    }
}

/// Spectra of complete, complete bipartite and star graphs without search.
fn closed_form(g: &Graph, wanted: &BTreeSet<usize>, spectrum: &mut CycleSpectrum) -> bool {
    match recognize(g) {
        StructuralClass::CompleteK(_) => {
            for &k in wanted {
                spectrum.insert_witness(g, (0..k).collect());
            }
            true
        }
        StructuralClass::CompleteBipartite(a, _) => {
            let parts = bipartition(g).expect("complete bipartite graphs are bipartite");
            for &k in wanted {
                if k % 2 == 1 {
                    spectrum.refute(k, Refutation::BipartiteOddLength);
                } else if k > 2 * a {
                    spectrum.refute(k, Refutation::ExceedsCycleBound { bound: 2 * a });
                } else {
                    let cycle = (0..k / 2).flat_map(|i| [parts.small[i], parts.large[i]]).collect();
                    spectrum.insert_witness(g, cycle);
                }
            }
            true
        }
        StructuralClass::Star(_) => {
            for &k in wanted {
                spectrum.refute(k, Refutation::ExceedsCycleBound { bound: 0 });
            }
            true
        }
        StructuralClass::Other => false,
    }
}

/// Growth from a shortest cycle, a Hamiltonian attempt on dense cores, and
/// shrinking from the longest cycle found.
fn constructive(g: &Graph, bounds: &CycleBounds, spectrum: &mut CycleSpectrum) {
    let Girth::Cycle(start) = girth(g) else { return };
    let mut found = BTreeMap::new();
    grow(g, &start, &mut found);
    let n = bounds.core.count();
    let min_core_degree = bounds
        .core
        .iter()
        .map(|v| g.neighbors(v).iter().filter(|&&w| bounds.core.contains(w)).count())
        .min()
        .unwrap_or(0);
    let longest = found.keys().next_back().copied().unwrap_or(0);
    if longest < n && 2 * min_core_degree >= n {
        if let Some(c) = rotation_extension(g, &bounds.core, 0x5eed, 200 * n as u64 * n as u64) {
            found.insert(c.len(), c);
        }
    }
    if let Some((_, top)) = found.iter().next_back() {
        let top = top.clone();
        shrink(g, &top, &mut found);
    }
    for (_, c) in found {
        spectrum.insert_witness(g, c);
    }
}

/// Verdict of a pancyclicity or bipancyclicity decision.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum CycleVerdict {
    Yes { spectrum: CycleSpectrum },
    /// At least one required length is refuted by a complete argument.
    No { missing: BTreeMap<usize, Refutation> },
    /// Nothing refuted, but some required lengths ran out of budget.
    Undecided { lengths: Vec<usize>, spectrum: CycleSpectrum },
}

impl CycleVerdict {
    pub fn is_yes(&self) -> bool {
        matches!(self, CycleVerdict::Yes { .. })
    }

    pub fn is_no(&self) -> bool {
        matches!(self, CycleVerdict::No { .. })
    }
}

/// Cycles of every length `3..=order`.
pub fn is_pancyclic(g: &Graph, budget: u64) -> CycleVerdict {
    let n = g.order();
    if n < 3 {
        return CycleVerdict::No { missing: BTreeMap::from([(3, Refutation::OrderTooSmall { order: n })]) };
    }
    decide(g, (3..=n).collect(), budget)
}

/// Cycles of every even length `4..=order`.
pub fn is_bipancyclic(g: &Graph, budget: u64) -> CycleVerdict {
    let n = g.order();
    if n < 4 {
        return CycleVerdict::No { missing: BTreeMap::from([(4, Refutation::OrderTooSmall { order: n })]) };
    }
    decide(g, (4..=n).step_by(2).collect(), budget)
}

fn decide(g: &Graph, required: Vec<usize>, budget: u64) -> CycleVerdict {
    // a cheap refutation of any single length settles the question
    let bounds = CycleBounds::new(g);
    let mut missing: BTreeMap<usize, Refutation> =
        required.iter().filter_map(|&k| bounds.refute(k).map(|r| (k, r))).collect();
    let top = *required.last().expect("required lengths are nonempty");
    if missing.is_empty() && top == g.order() {
        if let Some(r) = structural_refutation(g).or_else(|| {
            find_cut_certificate(g, &CertificateStrategy::defaults()).map(Refutation::CutCertificate)
        }) {
            missing.insert(top, r);
        }
    }
    if !missing.is_empty() {
        return CycleVerdict::No { missing };
    }
    let spectrum = cycle_spectrum_for(g, &required, budget).expect("lengths are in range");
    if required.iter().all(|k| spectrum.present.contains(k)) {
        return CycleVerdict::Yes { spectrum };
    }
    if !spectrum.refuted.is_empty() {
        return CycleVerdict::No { missing: spectrum.refuted };
    }
    CycleVerdict::Undecided { lengths: spectrum.undecided.iter().copied().collect(), spectrum }
}
