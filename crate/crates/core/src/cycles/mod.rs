//! Cycle structure: budgeted length search, spectra, Hamiltonicity with cut
//! certificates, girth, R-graph detection and the sufficient-condition
//! checkers.

mod certificate;
mod conditions;
mod girth;
mod grow;
mod hamilton;
mod rgraph;
mod search;
mod spectrum;

pub use certificate::{find_cut_certificate, CertificateStrategy, CutCertificate};
pub use conditions::{
    check_bondy_edge_count, check_diameter_condition, check_fan_condition, check_line_pancyclic_condition,
    FanCondition, FanViolation, LinePancyclicCondition,
};
pub use girth::{girth, Girth};
pub use hamilton::{is_hamiltonian, is_hamiltonian_with, HamiltonVerdict};
pub use rgraph::{is_r_graph, RGraphWitness};
pub use search::{has_cycle_of_length, has_cycle_of_length_unpruned, Refutation, SearchOutcome, DEFAULT_BUDGET};
pub use spectrum::{cycle_spectrum, cycle_spectrum_for, is_bipancyclic, is_pancyclic, CycleSpectrum, CycleVerdict};
