//! Zero-divisor graphs of `Z_n` and `Z_n[i]`, their line graphs and
//! complements, cycle-structure deciders with checkable witnesses, and a
//! suite of executable checks over finite parameter grids.
//!
//! The crate is layered bottom-up:
//!
//! - [`ring`]: residue arithmetic, zero-divisor classification, CRT.
//! - [`graph`]: bit-packed simple graphs, constructions, transforms, I/O.
//! - [`cycles`]: cycle search, spectra, Hamiltonicity, certificates and
//!   sufficient-condition checkers.
//! - [`suite`]: parameterized checks producing structured reports.

pub mod cycles;
pub mod error;
pub mod graph;
pub mod ring;
pub mod suite;

pub use error::{Error, Result};
