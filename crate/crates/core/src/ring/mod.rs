//! Arithmetic in `Z_n` and `Z_n[i]`, zero-divisor classification, Gaussian
//! prime classes and CRT decomposition. Also explicit multiplication-table
//! rings, used for direct products and small finite fields.

mod residue;
mod spec;
mod table;

pub use residue::{add, is_zero_divisor, mul, GaussianResidue};
pub use spec::{
    crt_decompose, crt_recombine, factorize, is_prime, make_ring, Element, PrimeClass, PrimeFactor, RingKind,
    RingSpec,
};
pub use table::TableRing;
