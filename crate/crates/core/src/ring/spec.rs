use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::residue::GaussianResidue;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RingKind {
    /// Integers modulo `n`.
    #[serde(rename = "zn")]
    Zn,
    /// Gaussian integers modulo `n`.
    #[serde(rename = "zni")]
    ZnGaussian,
}

impl RingKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            RingKind::Zn => "zn",
            RingKind::ZnGaussian => "zni",
        }
    }
}

impl std::str::FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zn" => Ok(RingKind::Zn),
            "zni" => Ok(RingKind::ZnGaussian),
            other => Err(Error::Parse(format!("unknown ring kind `{other}` (expected zn or zni)"))),
        }
    }
}

/// How an integer prime behaves in the Gaussian integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum PrimeClass {
    /// `2 = -i(1+i)²`.
    Ramified,
    /// `q ≡ 3 (mod 4)` stays prime.
    Inert,
    /// `p ≡ 1 (mod 4)` splits as `(a+bi)(a-bi)` with `a² + b² = p`, `a < b`.
    Split { a: u64, b: u64 },
}

impl PrimeClass {
    pub fn classify(prime: u64) -> Self {
        match prime % 4 {
            1 => {
                let (a, b) = two_squares(prime).expect("a prime congruent to 1 mod 4 is a sum of two squares");
                PrimeClass::Split { a, b }
            }
            3 => PrimeClass::Inert,
            _ => PrimeClass::Ramified,
        }
    }
}

/// Exhaustive search for `a² + b² = p` with `a < b`.
fn two_squares(p: u64) -> Option<(u64, u64)> {
    let mut a = 1u64;
    while 2 * a * a < p {
        let rest = p - a * a;
        let b = rest.isqrt();
        if b * b == rest {
            return Some((a, b));
        }
        a += 1;
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeFactor {
    pub prime: u64,
    pub exponent: u32,
}

impl PrimeFactor {
    pub fn power(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// The ring `Z_n` or `Z_n[i]` together with the factorization of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingSpec {
    n: u64,
    factors: Vec<PrimeFactor>,
    classes: Vec<PrimeClass>,
    kind: RingKind,
}

/// An element of a [`RingSpec`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Zn { value: u64, modulus: u64 },
    Gaussian(GaussianResidue),
}

impl Element {
    pub fn is_zero(&self) -> bool {
        match self {
            Element::Zn { value, .. } => *value == 0,
            Element::Gaussian(g) => g.is_zero(),
        }
    }

    /// Product of two elements of the same ring. Panics on mixed kinds or
    /// moduli; elements produced by one `RingSpec` never mix.
    pub fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Zn { value: a, modulus }, Element::Zn { value: b, modulus: m2 }) => {
                assert_eq!(modulus, m2, "modulus mismatch");
                let v = (*a as u128 * *b as u128 % *modulus as u128) as u64;
                Element::Zn { value: v, modulus: *modulus }
            }
            (Element::Gaussian(x), Element::Gaussian(y)) => {
                assert_eq!(x.modulus(), y.modulus(), "modulus mismatch");
                Element::Gaussian(x.mul_unchecked(y))
            }
            _ => panic!("cannot multiply elements of different ring kinds"),
        }
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Zn { value, .. } => write!(f, "{value}"),
            Element::Gaussian(g) => write!(f, "{g}"),
        }
    }
}

/// Trial-division factorization; factors come out in increasing order.
pub fn factorize(mut n: u64) -> Vec<PrimeFactor> {
    let mut out = Vec::new();
    let mut t = 2u64;
    while t * t <= n {
        if n % t == 0 {
            let mut e = 0;
            while n % t == 0 {
                n /= t;
                e += 1;
            }
            out.push(PrimeFactor { prime: t, exponent: e });
        }
        t += if t == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(PrimeFactor { prime: n, exponent: 1 });
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && matches!(factorize(n).as_slice(), [f] if f.exponent == 1)
}

pub fn make_ring(n: u64, kind: RingKind) -> Result<RingSpec> {
    if n == 0 {
        return Err(Error::InvalidModulus(n));
    }
    let factors = factorize(n);
    let classes = factors.iter().map(|f| PrimeClass::classify(f.prime)).collect();
    Ok(RingSpec { n, factors, classes, kind })
}

impl RingSpec {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn factors(&self) -> &[PrimeFactor] {
        &self.factors
    }

    pub fn classes(&self) -> &[PrimeClass] {
        &self.classes
    }

    pub fn order(&self) -> u64 {
        match self.kind {
            RingKind::Zn => self.n,
            RingKind::ZnGaussian => self.n * self.n,
        }
    }

    /// All elements in lexicographic `(re, im)` order (ascending for `Z_n`).
    pub fn elements(&self) -> Vec<Element> {
        let n = self.n;
        match self.kind {
            RingKind::Zn => (0..n).map(|value| Element::Zn { value, modulus: n }).collect(),
            RingKind::ZnGaussian => (0..n)
                .flat_map(|re| (0..n).map(move |im| Element::Gaussian(GaussianResidue::from_canonical(re, im, n))))
                .collect(),
        }
    }

    pub fn is_zero_divisor(&self, x: &Element) -> bool {
        match x {
            Element::Zn { value, .. } => *value != 0 && value.gcd(&self.n) > 1,
            Element::Gaussian(g) => g.is_zero_divisor(),
        }
    }

    /// Nonzero zero divisors in element order. Empty for fields and `n = 1`.
    pub fn zero_divisor_set(&self) -> Vec<Element> {
        self.elements().into_iter().filter(|x| self.is_zero_divisor(x)).collect()
    }

    /// Reduces `x` modulo each prime-power factor of `n`.
    pub fn crt_decompose(&self, x: &GaussianResidue) -> Result<Vec<GaussianResidue>> {
        if x.modulus() != self.n {
            return Err(Error::ModulusMismatch { left: x.modulus(), right: self.n });
        }
        if self.factors.is_empty() {
            return Err(Error::EmptyFactorization);
        }
        Ok(self
            .factors
            .iter()
            .map(|f| {
                let m = f.power();
                GaussianResidue::from_canonical(x.re() % m, x.im() % m, m)
            })
            .collect())
    }

    /// Inverse of [`crt_decompose`](Self::crt_decompose).
    pub fn crt_recombine(&self, parts: &[GaussianResidue]) -> Result<GaussianResidue> {
        if self.factors.is_empty() {
            return Err(Error::EmptyFactorization);
        }
        if parts.len() != self.factors.len() {
            return Err(Error::ComponentCount { expected: self.factors.len(), got: parts.len() });
        }
        let mut re = 0u128;
        let mut im = 0u128;
        let n = self.n as u128;
        for (part, f) in parts.iter().zip(&self.factors) {
            let m = f.power();
            if part.modulus() != m {
                return Err(Error::ModulusMismatch { left: part.modulus(), right: m });
            }
            let rest = self.n / m;
            // rest · (rest⁻¹ mod m) is 1 mod m and 0 mod every other factor
            let inv = mod_inverse(rest % m, m).expect("coprime prime-power factors");
            let basis = rest as u128 * inv as u128 % n;
            re = (re + part.re() as u128 * basis) % n;
            im = (im + part.im() as u128 * basis) % n;
        }
        Ok(GaussianResidue::from_canonical(re as u64, im as u64, self.n))
    }
}

fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

pub fn crt_decompose(x: &GaussianResidue, ring: &RingSpec) -> Result<Vec<GaussianResidue>> {
    ring.crt_decompose(x)
}

pub fn crt_recombine(parts: &[GaussianResidue], ring: &RingSpec) -> Result<GaussianResidue> {
    ring.crt_recombine(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorization_and_classes() {
        let r = make_ring(12, RingKind::Zn).unwrap();
        assert_eq!(r.factors(), &[PrimeFactor { prime: 2, exponent: 2 }, PrimeFactor { prime: 3, exponent: 1 }]);
        assert_eq!(r.classes(), &[PrimeClass::Ramified, PrimeClass::Inert]);

        let r = make_ring(5, RingKind::ZnGaussian).unwrap();
        assert_eq!(r.classes(), &[PrimeClass::Split { a: 1, b: 2 }]);

        let r = make_ring(49, RingKind::ZnGaussian).unwrap();
        assert_eq!(r.factors(), &[PrimeFactor { prime: 7, exponent: 2 }]);
        assert_eq!(r.classes(), &[PrimeClass::Inert]);

        assert!(make_ring(1, RingKind::Zn).unwrap().factors().is_empty());
        assert!(make_ring(0, RingKind::Zn).is_err());
    }

    #[test]
    fn split_pairs_sum_to_the_prime() {
        for p in [5u64, 13, 17, 29, 37, 41, 53, 61, 73, 89, 97, 101, 1009] {
            match PrimeClass::classify(p) {
                PrimeClass::Split { a, b } => {
                    assert_eq!(a * a + b * b, p);
                    assert!(a < b);
                }
                other => panic!("{p} classified as {other:?}"),
            }
        }
    }

    #[test]
    fn zero_divisor_set_sizes() {
        let size = |n, kind| make_ring(n, kind).unwrap().zero_divisor_set().len();
        assert_eq!(size(4, RingKind::ZnGaussian), 7);
        assert_eq!(size(9, RingKind::ZnGaussian), 8);
        assert_eq!(size(5, RingKind::ZnGaussian), 8);
        assert_eq!(size(125, RingKind::Zn), 24);
        assert_eq!(size(3, RingKind::ZnGaussian), 0);
        assert_eq!(size(1, RingKind::ZnGaussian), 0);
        assert_eq!(size(7, RingKind::Zn), 0);
    }

    #[test]
    fn zero_divisor_set_is_lexicographic() {
        let zs = make_ring(4, RingKind::ZnGaussian).unwrap().zero_divisor_set();
        let labels: Vec<String> = zs.iter().map(|e| e.to_string()).collect();
        assert_eq!(labels, ["0+2i", "1+1i", "1+3i", "2+0i", "2+2i", "3+1i", "3+3i"]);
        let zs = make_ring(6, RingKind::Zn).unwrap().zero_divisor_set();
        assert_eq!(zs.iter().map(|e| e.to_string()).collect::<Vec<_>>(), ["2", "3", "4"]);
    }

    #[test]
    fn crt_example() {
        let ring = make_ring(12, RingKind::ZnGaussian).unwrap();
        let x = GaussianResidue::new(7, 5, 12).unwrap();
        let parts = ring.crt_decompose(&x).unwrap();
        assert_eq!(parts, vec![GaussianResidue::new(3, 1, 4).unwrap(), GaussianResidue::new(1, 2, 3).unwrap()]);
        assert_eq!(ring.crt_recombine(&parts).unwrap(), x);
    }

    #[test]
    fn crt_errors() {
        let ring = make_ring(12, RingKind::ZnGaussian).unwrap();
        let wrong = GaussianResidue::new(1, 1, 5).unwrap();
        assert!(ring.crt_decompose(&wrong).is_err());
        assert!(matches!(ring.crt_recombine(&[wrong]), Err(Error::ComponentCount { expected: 2, got: 1 })));
        let unit = make_ring(1, RingKind::ZnGaussian).unwrap();
        assert_eq!(unit.crt_decompose(&GaussianResidue::zero(1).unwrap()), Err(Error::EmptyFactorization));
    }
}
