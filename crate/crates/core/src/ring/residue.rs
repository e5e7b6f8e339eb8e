use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element `re + im·i` of `Z_n[i]`, always held in canonical form
/// `0 <= re, im < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaussianResidue {
    re: u64,
    im: u64,
    modulus: u64,
}

impl GaussianResidue {
    /// Reduces `re + im·i` modulo `modulus`. Negative components are accepted.
    pub fn new(re: i64, im: i64, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return Err(Error::InvalidModulus(modulus));
        }
        let m = modulus as i128;
        Ok(Self {
            re: (re as i128).rem_euclid(m) as u64,
            im: (im as i128).rem_euclid(m) as u64,
            modulus,
        })
    }

    pub fn zero(modulus: u64) -> Result<Self> {
        Self::new(0, 0, modulus)
    }

    pub fn one(modulus: u64) -> Result<Self> {
        Self::new(1, 0, modulus)
    }

    pub(crate) fn from_canonical(re: u64, im: u64, modulus: u64) -> Self {
        debug_assert!(re < modulus && im < modulus);
        Self { re, im, modulus }
    }

    pub fn re(&self) -> u64 {
        self.re
    }

    pub fn im(&self) -> u64 {
        self.im
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    /// `N(x) = re² + im²` reduced modulo `n`.
    pub fn norm(&self) -> u64 {
        let m = self.modulus as u128;
        let (a, b) = (self.re as u128, self.im as u128);
        ((a * a + b * b) % m) as u64
    }

    pub fn conjugate(&self) -> Self {
        Self::from_canonical(self.re, (self.modulus - self.im) % self.modulus, self.modulus)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        let m = self.modulus;
        Ok(Self::from_canonical((self.re + other.re) % m, (self.im + other.im) % m, m))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_modulus(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let m = self.modulus as u128;
        let (a, b) = (self.re as u128, self.im as u128);
        let (c, d) = (other.re as u128, other.im as u128);
        // a·c − b·d without leaving the unsigned domain
        let re = (a * c % m + m - b * d % m) % m;
        let im = (a * d + b * c) % m;
        Self::from_canonical(re as u64, im as u64, self.modulus)
    }

    /// Nonzero and annihilated by some nonzero element. Decided by the norm
    /// criterion `gcd(N(x), n) > 1`.
    pub fn is_zero_divisor(&self) -> bool {
        !self.is_zero() && self.norm().gcd(&self.modulus) > 1
    }

    /// Invertible, i.e. `gcd(N(x), n) = 1`.
    pub fn is_unit(&self) -> bool {
        self.norm().gcd(&self.modulus) == 1
    }

    fn same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        Ok(())
    }
}

impl fmt::Display for GaussianResidue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i", self.re, self.im)
    }
}

/// Componentwise sum modulo `n`.
pub fn add(x: &GaussianResidue, y: &GaussianResidue) -> Result<GaussianResidue> {
    x.checked_add(y)
}

/// Complex product modulo `n`.
pub fn mul(x: &GaussianResidue, y: &GaussianResidue) -> Result<GaussianResidue> {
    x.checked_mul(y)
}

pub fn is_zero_divisor(x: &GaussianResidue) -> bool {
    x.is_zero_divisor()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64, n: u64) -> GaussianResidue {
        GaussianResidue::new(re, im, n).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(add(&g(3, 2, 4), &g(2, 3, 4)).unwrap(), g(1, 1, 4));
        let x = g(5, 7, 11);
        assert_eq!(add(&g(0, 0, 11), &x).unwrap(), x);
        assert!(add(&x, &g(11 - 5, 11 - 7, 11)).unwrap().is_zero());
    }

    #[test]
    fn multiplication_examples() {
        assert!(mul(&g(1, 1, 2), &g(1, 1, 2)).unwrap().is_zero());
        assert!(mul(&g(2, 1, 5), &g(2, 4, 5)).unwrap().is_zero());
        let x = g(3, 9, 13);
        assert_eq!(mul(&g(1, 0, 13), &x).unwrap(), x);
        // (1+2i)(3+4i) = -5+10i
        assert_eq!(mul(&g(1, 2, 7), &g(3, 4, 7)).unwrap(), g(-5, 10, 7));
    }

    #[test]
    fn modulus_mismatch_is_rejected() {
        let err = add(&g(1, 0, 4), &g(1, 0, 5)).unwrap_err();
        assert_eq!(err, Error::ModulusMismatch { left: 4, right: 5 });
        assert!(mul(&g(1, 0, 4), &g(1, 0, 5)).is_err());
        assert!(GaussianResidue::new(1, 1, 0).is_err());
    }

    #[test]
    fn zero_divisor_examples() {
        assert!(g(1, 1, 2).is_zero_divisor());
        assert!(g(2, 1, 5).is_zero_divisor());
        assert!(!g(1, 2, 3).is_zero_divisor());
        assert!(!g(0, 0, 6).is_zero_divisor());
    }

    #[test]
    fn canonical_form_and_display() {
        let x = g(-1, 9, 4);
        assert_eq!((x.re(), x.im()), (3, 1));
        assert_eq!(x.to_string(), "3+1i");
        assert_eq!(x.conjugate(), g(3, -1, 4));
        assert_eq!(g(3, 4, 100).norm(), 25);
    }
}
