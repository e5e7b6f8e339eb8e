use super::spec::{factorize, make_ring, Element, RingKind};
use crate::error::{Error, Result};
use crate::graph::Label;

/// A finite commutative ring given by an explicit multiplication table.
///
/// Only multiplication is stored; zero-divisor graphs need nothing else.
/// Element `i` carries `labels[i]`, and `zero` is the index of the additive
/// identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRing {
    name: String,
    labels: Vec<Label>,
    zero: usize,
    table: Vec<u32>,
}

impl TableRing {
    /// Validates that the table is square, closed, commutative and that
    /// `zero` annihilates everything.
    pub fn from_table(name: impl Into<String>, labels: Vec<Label>, zero: usize, table: Vec<u32>) -> Result<Self> {
        let size = labels.len();
        if size == 0 || zero >= size {
            return Err(Error::InvalidTable("empty ring or zero index out of range".into()));
        }
        if table.len() != size * size {
            return Err(Error::InvalidTable(format!("expected {} entries, got {}", size * size, table.len())));
        }
        if table.iter().any(|&v| v as usize >= size) {
            return Err(Error::InvalidTable("product outside the element set".into()));
        }
        for a in 0..size {
            if table[a * size + zero] as usize != zero {
                return Err(Error::InvalidTable(format!("zero does not annihilate element {a}")));
            }
            for b in 0..a {
                if table[a * size + b] != table[b * size + a] {
                    return Err(Error::InvalidTable(format!("not commutative at ({a}, {b})")));
                }
            }
        }
        Ok(Self { name: name.into(), labels, zero, table })
    }

    pub fn zn(n: u64) -> Result<Self> {
        Self::from_ring_spec(n, RingKind::Zn)
    }

    pub fn gaussian(n: u64) -> Result<Self> {
        Self::from_ring_spec(n, RingKind::ZnGaussian)
    }

    fn from_ring_spec(n: u64, kind: RingKind) -> Result<Self> {
        let ring = make_ring(n, kind)?;
        let elements = ring.elements();
        let size = elements.len();
        let index = |e: &Element| -> usize {
            match e {
                Element::Zn { value, .. } => *value as usize,
                Element::Gaussian(g) => (g.re() * n + g.im()) as usize,
            }
        };
        let mut table = vec![0u32; size * size];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate().skip(i) {
                let p = index(&a.mul(b)) as u32;
                table[i * size + j] = p;
                table[j * size + i] = p;
            }
        }
        let labels = elements.iter().map(Label::from).collect();
        let name = match kind {
            RingKind::Zn => format!("Z_{n}"),
            RingKind::ZnGaussian => format!("Z_{n}[i]"),
        };
        Self::from_table(name, labels, 0, table)
    }

    /// The field with `order` elements, built as `F_p[x]/(f)` for the first
    /// monic `f` of the right degree whose quotient has no zero divisors.
    /// Elements are labelled by their base-`p` coefficient code.
    pub fn galois_field(order: u64) -> Result<Self> {
        let factors = factorize(order);
        let [f] = factors.as_slice() else {
            return Err(Error::NotPrimePower(order));
        };
        let (p, k) = (f.prime as usize, f.exponent as usize);
        if k == 1 {
            let mut field = Self::zn(order)?;
            field.name = format!("F_{order}");
            return Ok(field);
        }
        let size = order as usize;
        let digits = |mut code: usize| -> Vec<usize> {
            let mut d = vec![0; k];
            for slot in d.iter_mut() {
                *slot = code % p;
                code /= p;
            }
            d
        };
        let encode = |d: &[usize]| d.iter().rev().fold(0usize, |acc, &c| acc * p + c);
        // the modulus x^k + tail, tail encoded like an element
        for tail in 0..size {
            let tail = digits(tail);
            let mut table = vec![0u32; size * size];
            for a in 0..size {
                let da = digits(a);
                for b in 0..size {
                    let db = digits(b);
                    let mut prod = vec![0usize; 2 * k - 1];
                    for (i, &x) in da.iter().enumerate() {
                        for (j, &y) in db.iter().enumerate() {
                            prod[i + j] = (prod[i + j] + x * y) % p;
                        }
                    }
                    // reduce x^d for d >= k using x^k = -tail
                    for d in (k..2 * k - 1).rev() {
                        let c = prod[d];
                        if c != 0 {
                            prod[d] = 0;
                            for (i, &t) in tail.iter().enumerate() {
                                prod[d - k + i] = (prod[d - k + i] + (p - t) * c) % p;
                            }
                        }
                    }
                    table[a * size + b] = encode(&prod[..k]) as u32;
                }
            }
            let labels = (0..size as u64).map(Label::Int).collect();
            let ring = Self::from_table(format!("F_{order}"), labels, 0, table)?;
            if ring.is_integral_domain() {
                return Ok(ring);
            }
        }
        unreachable!("an irreducible polynomial of every degree exists over F_p")
    }

    /// Direct product with componentwise multiplication; elements ordered
    /// lexicographically by `(left index, right index)`.
    pub fn product(left: &TableRing, right: &TableRing) -> TableRing {
        let (n1, n2) = (left.size(), right.size());
        let size = n1 * n2;
        let mut table = vec![0u32; size * size];
        for a in 0..size {
            let (a1, a2) = (a / n2, a % n2);
            for b in 0..size {
                let (b1, b2) = (b / n2, b % n2);
                table[a * size + b] = (left.mul(a1, b1) * n2 + right.mul(a2, b2)) as u32;
            }
        }
        let labels = (0..size)
            .map(|a| Label::Tuple(vec![left.labels[a / n2].clone(), right.labels[a % n2].clone()]))
            .collect();
        TableRing {
            name: format!("{} x {}", left.name, right.name),
            labels,
            zero: left.zero * n2 + right.zero,
            table,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn label(&self, element: usize) -> &Label {
        &self.labels[element]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size() + b] as usize
    }

    /// Brute force over the table: nonzero and annihilated by a nonzero element.
    pub fn is_zero_divisor(&self, a: usize) -> bool {
        a != self.zero && (0..self.size()).any(|b| b != self.zero && self.mul(a, b) == self.zero)
    }

    pub fn zero_divisors(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.is_zero_divisor(a)).collect()
    }

    /// No nonzero zero divisors (and at least two elements).
    pub fn is_integral_domain(&self) -> bool {
        self.size() > 1 && self.zero_divisors().is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn galois_fields_are_fields() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = TableRing::galois_field(q).unwrap();
            assert_eq!(f.size() as u64, q);
            assert!(f.is_integral_domain(), "F_{q}");
        }
        assert_eq!(TableRing::galois_field(6), Err(Error::NotPrimePower(6)));
    }

    #[test]
    fn product_zero_divisors() {
        let r = TableRing::product(&TableRing::zn(3).unwrap(), &TableRing::zn(5).unwrap());
        let zd: Vec<String> = r.zero_divisors().iter().map(|&a| r.label(a).to_string()).collect();
        assert_eq!(zd, ["(0,1)", "(0,2)", "(0,3)", "(0,4)", "(1,0)", "(2,0)"]);
        assert!(!r.is_integral_domain());
        assert!(TableRing::zn(4).unwrap().zero_divisors() == vec![2]);
    }

    #[test]
    fn invalid_tables_are_rejected() {
        let labels = vec![Label::Int(0), Label::Int(1)];
        assert!(TableRing::from_table("bad", labels.clone(), 0, vec![0, 0, 0]).is_err());
        assert!(TableRing::from_table("bad", labels.clone(), 0, vec![0, 1, 0, 1]).is_err());
        assert!(TableRing::from_table("bad", labels.clone(), 0, vec![0, 0, 1, 1]).is_err());
        assert!(TableRing::from_table("ok", labels, 0, vec![0, 0, 0, 1]).is_ok());
    }

    #[test]
    fn gaussian_table_matches_residue_arithmetic() {
        let r = TableRing::gaussian(6).unwrap();
        assert_eq!(r.size(), 36);
        // (1+1i)(1+5i) = 1 - 5 + 6i = -4 = 2 mod 6 -> index 2*6 + 0
        assert_eq!(r.mul(7, 11), 12);
        assert_eq!(r.zero_divisors().len(), make_ring(6, RingKind::ZnGaussian).unwrap().zero_divisor_set().len());
    }
}
