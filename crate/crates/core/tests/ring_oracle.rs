use num_integer::Integer;
use proptest::prelude::*;
use zdg_core::ring::{factorize, make_ring, Element, GaussianResidue, PrimeClass, RingKind};

/// Nonzero `x` with some nonzero `y` such that `x * y = 0`, by scanning all of `y`.
fn brute_zero_divisor(x: &Element, all: &[Element]) -> bool {
    !x.is_zero() && all.iter().any(|y| !y.is_zero() && x.mul(y).is_zero())
}

/// `x * y = 1` for some `y`, by scanning.
fn brute_unit(x: &Element, all: &[Element]) -> bool {
    all.iter().any(|y| match x.mul(y) {
        Element::Zn { value, .. } => value == 1,
        Element::Gaussian(g) => g.re() == 1 && g.im() == 0,
    })
}

#[test]
fn norm_criterion_matches_brute_force_up_to_30() {
    for n in 1..=30u64 {
        for kind in [RingKind::Zn, RingKind::ZnGaussian] {
            let ring = make_ring(n, kind).unwrap();
            let all = ring.elements();
            for x in &all {
                assert_eq!(ring.is_zero_divisor(x), brute_zero_divisor(x, &all), "n={n} {kind:?} x={x}");
            }
        }
    }
}

#[test]
fn every_nonzero_element_is_a_unit_or_a_zero_divisor() {
    for n in 2..=30u64 {
        for kind in [RingKind::Zn, RingKind::ZnGaussian] {
            let ring = make_ring(n, kind).unwrap();
            let all = ring.elements();
            for x in all.iter().filter(|x| !x.is_zero()) {
                assert_ne!(brute_unit(x, &all), ring.is_zero_divisor(x), "n={n} {kind:?} x={x}");
            }
        }
    }
}

/// Units of `Z_n[i]` from the splitting of each prime.
fn gaussian_units(n: u64) -> u64 {
    factorize(n)
        .iter()
        .map(|f| {
            let (p, e) = (f.prime, f.exponent);
            let whole = p.pow(2 * e);
            match PrimeClass::classify(p) {
                PrimeClass::Ramified => whole / 2,
                PrimeClass::Inert => whole - whole / (p * p),
                PrimeClass::Split { .. } => whole / (p * p) * (p - 1) * (p - 1),
            }
        })
        .product()
}

#[test]
fn zero_divisor_counts_match_unit_formula() {
    for n in 2..=60u64 {
        let zn = make_ring(n, RingKind::Zn).unwrap();
        let phi = (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64;
        assert_eq!(zn.zero_divisor_set().len() as u64, n - phi - 1, "Z_{n}");
        let zi = make_ring(n, RingKind::ZnGaussian).unwrap();
        assert_eq!(zi.zero_divisor_set().len() as u64, n * n - gaussian_units(n) - 1, "Z_{n}[i]");
    }
}

#[test]
fn known_orders() {
    let count = |n, kind| make_ring(n, kind).unwrap().zero_divisor_set().len();
    assert_eq!(count(4, RingKind::ZnGaussian), 7);
    assert_eq!(count(9, RingKind::ZnGaussian), 8);
    assert_eq!(count(5, RingKind::ZnGaussian), 8);
    assert_eq!(count(25, RingKind::ZnGaussian), 224);
    assert_eq!(count(27, RingKind::ZnGaussian), 80);
    assert_eq!(count(21, RingKind::ZnGaussian), 56);
    assert_eq!(count(13, RingKind::Zn), 0);
}

#[test]
fn crt_is_a_bijection() {
    for n in [6u64, 12, 15, 20] {
        let ring = make_ring(n, RingKind::ZnGaussian).unwrap();
        let mut images = std::collections::BTreeSet::new();
        for re in 0..n {
            for im in 0..n {
                let x = GaussianResidue::new(re as i64, im as i64, n).unwrap();
                let parts = ring.crt_decompose(&x).unwrap();
                assert_eq!(ring.crt_recombine(&parts).unwrap(), x);
                images.insert(parts.iter().map(|p| (p.re(), p.im(), p.modulus())).collect::<Vec<_>>());
            }
        }
        assert_eq!(images.len() as u64, n * n, "n={n}");
    }
}

#[test]
fn crt_rejects_mismatched_input() {
    let ring = make_ring(12, RingKind::ZnGaussian).unwrap();
    assert!(ring.crt_decompose(&GaussianResidue::new(1, 1, 6).unwrap()).is_err());
    assert!(ring.crt_recombine(&[GaussianResidue::new(1, 0, 4).unwrap()]).is_err());
    assert!(make_ring(0, RingKind::Zn).is_err());
}

proptest! {
    #[test]
    fn crt_respects_multiplication(n in 2u64..200, a in 0i64..400, b in 0i64..400, c in 0i64..400, d in 0i64..400) {
        let ring = make_ring(n, RingKind::ZnGaussian).unwrap();
        let x = GaussianResidue::new(a, b, n).unwrap();
        let y = GaussianResidue::new(c, d, n).unwrap();
        let xy = ring.crt_decompose(&x.checked_mul(&y).unwrap()).unwrap();
        let parts: Vec<_> = ring.crt_decompose(&x).unwrap().iter()
            .zip(ring.crt_decompose(&y).unwrap())
            .map(|(p, q)| p.checked_mul(&q).unwrap())
            .collect();
        prop_assert_eq!(xy, parts);
    }

    #[test]
    fn norm_is_multiplicative(n in 2u64..500, a in -500i64..500, b in -500i64..500, c in -500i64..500, d in -500i64..500) {
        let x = GaussianResidue::new(a, b, n).unwrap();
        let y = GaussianResidue::new(c, d, n).unwrap();
        prop_assert_eq!(x.checked_mul(&y).unwrap().norm(), x.norm() * y.norm() % n);
    }

    #[test]
    fn zero_divisors_are_closed_under_conjugation(n in 2u64..300, a in 0i64..300, b in 0i64..300) {
        let x = GaussianResidue::new(a, b, n).unwrap();
        prop_assert_eq!(x.is_zero_divisor(), x.conjugate().is_zero_divisor());
        prop_assert!(x.is_zero() || x.is_zero_divisor() != x.is_unit());
    }

    #[test]
    fn factorization_recombines(n in 1u64..1_000_000) {
        let f = factorize(n);
        prop_assert_eq!(f.iter().map(|p| p.power()).product::<u64>(), n);
        prop_assert!(f.windows(2).all(|w| w[0].prime < w[1].prime));
    }
}
