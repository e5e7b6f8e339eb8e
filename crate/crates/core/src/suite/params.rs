use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{CheckId, Profile};
use crate::error::{Error, Result};
use crate::ring::{factorize, is_prime, TableRing};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ParamValue {
    Int(u64),
    Text(String),
}

impl std::fmt::Display for ParamValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParamValue::Int(v) => write!(f, "{v}"),
            ParamValue::Text(s) => f.write_str(s),
        }
    }
}

/// Symbol → value, e.g. `{"q": 3, "m": 2}`.
pub type Params = BTreeMap<String, ParamValue>;

/// Largest `n` accepted for `Z_n[i]`; keeps graphs within a few thousand vertices.
pub(crate) const GAUSSIAN_MODULUS_CAP: u64 = 130;
/// Largest `n` accepted for `Z_n`.
pub(crate) const INTEGER_MODULUS_CAP: u64 = 20_000;

fn ints(pairs: &[(&str, u64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), ParamValue::Int(v))).collect()
}

fn texts(pairs: &[(&str, &str)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), ParamValue::Text(v.to_string()))).collect()
}

fn pm(key: &str, points: &[(u64, u64)]) -> Vec<Params> {
    points.iter().map(|&(a, m)| ints(&[(key, a), ("m", m)])).collect()
}

fn single(key: &str, values: &[u64]) -> Vec<Params> {
    values.iter().map(|&v| ints(&[(key, v)])).collect()
}

fn pairs(a: &str, b: &str, points: &[(u64, u64)]) -> Vec<Params> {
    points.iter().map(|&(x, y)| ints(&[(a, x), (b, y)])).collect()
}

fn rings(points: &[(&str, &str)]) -> Vec<Params> {
    points.iter().map(|&(l, r)| texts(&[("left", l), ("right", r)])).collect()
}

/// Parameter points of `id` under `profile`.
pub fn grid(id: CheckId, profile: Profile) -> Vec<Params> {
    use CheckId::*;
    use Profile::*;
    let by = |smoke: Vec<Params>, standard: Vec<Params>, extra: Vec<Params>| match profile {
        Smoke => smoke,
        Standard => standard,
        Extended => standard.into_iter().chain(extra).collect(),
    };
    match id {
        GaussianTwoPowerNotPancyclic => by(single("m", &[2]), single("m", &[2, 3]), single("m", &[4])),
        GaussianInertPancyclic => {
            by(pm("q", &[(3, 2), (3, 3)]), pm("q", &[(3, 2), (3, 3), (7, 2)]), pm("q", &[(11, 2), (3, 4)]))
        }
        GaussianSplitBipancyclic => {
            by(pm("p", &[(5, 1), (5, 2)]), pm("p", &[(5, 1), (13, 1), (5, 2)]), pm("p", &[(17, 1), (29, 1)]))
        }
        InertProductBipartite => {
            by(pairs("q1", "q2", &[(3, 7)]), pairs("q1", "q2", &[(3, 7), (3, 11)]), pairs("q1", "q2", &[(7, 11)]))
        }
        CutCertificateSoundness | LineDegreeSumCondition | LineDiameterCondition | RGraphLinePancyclic
        | FanHamiltonian => by(single("max_order", &[7]), single("max_order", &[9]), single("max_order", &[11])),
        SquarefreeNotHamiltonian => by(single("n", &[6, 30]), single("n", &[6, 15, 30, 105]), single("n", &[210, 1155])),
        PrimePowerHamiltonian | PrimePowerPancyclic => by(
            pm("p", &[(5, 2), (5, 3)]),
            pm("p", &[(5, 2), (5, 3), (7, 2), (7, 3)]),
            pm("p", &[(11, 2), (11, 3), (5, 4), (13, 2)]),
        ),
        TwoPrimeSquaresNotHamiltonian => by(
            pairs("p", "q", &[(2, 3)]),
            pairs("p", "q", &[(2, 3), (2, 5), (3, 5)]),
            pairs("p", "q", &[(2, 7), (3, 7), (5, 7)]),
        ),
        ProductBipancyclic => by(
            rings(&[("F3", "F3"), ("Z4", "Z3")]),
            rings(&[
                ("F3", "F3"),
                ("F4", "F4"),
                ("F5", "F5"),
                ("Z4", "Z3"),
                ("Z4", "Z4"),
                ("Z4", "F4"),
                ("Z2xZ2", "F4"),
                ("F3", "F5"),
            ]),
            rings(&[("F7", "F7"), ("F8", "F8"), ("F9", "F9"), ("Z9", "Z3"), ("Z4", "Z5"), ("Z2xZ2", "Z2xZ2")]),
        ),
        ProductExample => vec![Params::new()],
        LineSemiprimePancyclic => by(
            pairs("p", "q", &[(2, 5), (3, 5)]),
            pairs("p", "q", &[(2, 7), (2, 11), (3, 5), (3, 7)]),
            pairs("p", "q", &[(5, 7), (2, 13), (3, 11)]),
        ),
        LinePrimePowerPancyclic => by(
            pm("p", &[(5, 2)]),
            pm("p", &[(5, 2), (5, 3), (7, 2), (7, 3)]),
            pm("p", &[(11, 2), (11, 3)]),
        ),
        LineGaussianTwoPower => by(single("m", &[2]), single("m", &[2, 3]), single("m", &[4])),
        LineGaussianInert => by(
            pm("q", &[(3, 2), (3, 3)]),
            pm("q", &[(3, 2), (3, 3), (7, 2), (3, 4)]),
            pm("q", &[(11, 2)]),
        ),
        LineGaussianSplit => by(pm("p", &[(5, 1)]), pm("p", &[(5, 1), (13, 1)]), pm("p", &[(17, 1), (5, 2)])),
        ComplementIsolatedVertex => by(
            [pm("t", &[(2, 2)]), pm("q", &[(3, 2)])].concat(),
            [pm("t", &[(2, 2), (2, 3)]), pm("q", &[(3, 2), (3, 3)])].concat(),
            [pm("t", &[(2, 4)]), pm("q", &[(7, 2)])].concat(),
        ),
        ComplementSplitPancyclic => {
            by(pm("p", &[(5, 1), (5, 2)]), pm("p", &[(5, 1), (13, 1), (5, 2)]), pm("p", &[(17, 1)]))
        }
        ComplementInertNotPancyclic => {
            by(pm("q", &[(3, 2), (3, 3)]), pm("q", &[(3, 2), (3, 3), (7, 2)]), pm("q", &[(3, 4), (11, 2)]))
        }
        DegenerateComplements => by(
            [pm("t", &[(2, 1), (2, 2)]), pm("q", &[(3, 2)])].concat(),
            [pm("t", &[(2, 1), (2, 2), (2, 3)]), pm("q", &[(3, 2), (7, 2), (3, 3)])].concat(),
            pm("t", &[(2, 4)]),
        ),
        LineComplementTwoPower => by(single("m", &[2]), single("m", &[2, 3]), vec![]),
        LineComplementInert => by(pm("q", &[(3, 3)]), pm("q", &[(3, 3)]), vec![]),
    }
}

pub(crate) fn int(params: &Params, key: &str) -> Result<u64> {
    match params.get(key) {
        Some(ParamValue::Int(v)) => Ok(*v),
        _ => Err(Error::Parse(format!("missing integer parameter `{key}`"))),
    }
}

pub(crate) fn text<'a>(params: &'a Params, key: &str) -> Result<&'a str> {
    match params.get(key) {
        Some(ParamValue::Text(v)) => Ok(v),
        _ => Err(Error::Parse(format!("missing ring parameter `{key}`"))),
    }
}

/// Ring names: `Z<n>`, `F<q>` and products joined by `x`, e.g. `Z2xZ2`.
pub(crate) fn parse_table_ring(name: &str) -> Result<TableRing> {
    let bad = || Error::Parse(format!("unknown ring `{name}` (expected Z<n>, F<q> or AxB)"));
    let mut factors = name.split('x').map(|part| {
        let (head, digits) = part.split_at(part.len().min(1));
        let order: u64 = digits.parse().map_err(|_| bad())?;
        if order < 2 || order > 64 {
            return Err(bad());
        }
        match head {
            "Z" => TableRing::zn(order),
            "F" => TableRing::galois_field(order),
            _ => Err(bad()),
        }
    });
    let first = factors.next().ok_or_else(bad)??;
    let ring = factors.try_fold(first, |acc, f| f.map(|f| TableRing::product(&acc, &f)))?;
    if ring.size() > 64 {
        return Err(Error::Parse(format!("ring `{name}` has more than 64 elements")));
    }
    Ok(ring)
}

fn reject(id: CheckId, reason: impl Into<String>) -> Error {
    Error::InadmissibleParams { check: id.as_str().to_string(), reason: reason.into() }
}

fn expect_keys(id: CheckId, params: &Params, keys: &[&str]) -> Result<()> {
    let mut want: Vec<&str> = keys.to_vec();
    want.sort_unstable();
    let have: Vec<&str> = params.keys().map(String::as_str).collect();
    if have != want {
        return Err(reject(id, format!("expected parameters {want:?}, got {have:?}")));
    }
    Ok(())
}

fn split_prime(id: CheckId, p: u64) -> Result<()> {
    if is_prime(p) && p % 4 == 1 {
        Ok(())
    } else {
        Err(reject(id, format!("p = {p} must be a prime congruent to 1 mod 4")))
    }
}

fn inert_prime(id: CheckId, q: u64) -> Result<()> {
    if is_prime(q) && q % 4 == 3 {
        Ok(())
    } else {
        Err(reject(id, format!("q = {q} must be a prime congruent to 3 mod 4")))
    }
}

fn range(id: CheckId, name: &str, v: u64, lo: u64, hi: u64) -> Result<()> {
    if (lo..=hi).contains(&v) {
        Ok(())
    } else {
        Err(reject(id, format!("{name} = {v} outside {lo}..={hi}")))
    }
}

fn power(id: CheckId, base: u64, m: u64, cap: u64) -> Result<u64> {
    let value = u32::try_from(m).ok().and_then(|e| base.checked_pow(e)).filter(|&v| v <= cap);
    value.ok_or_else(|| reject(id, format!("{base}^{m} exceeds the supported modulus {cap}")))
}

/// Rejects parameters outside the hypotheses of `id` or beyond desk scale.
pub fn validate_params(id: CheckId, params: &Params) -> Result<()> {
    use CheckId::*;
    match id {
        GaussianTwoPowerNotPancyclic | LineGaussianTwoPower => {
            expect_keys(id, params, &["m"])?;
            range(id, "m", int(params, "m")?, 2, 4)
        }
        LineComplementTwoPower => {
            expect_keys(id, params, &["m"])?;
            range(id, "m", int(params, "m")?, 2, 3)
        }
        GaussianInertPancyclic | ComplementInertNotPancyclic | LineGaussianInert | LineComplementInert => {
            expect_keys(id, params, &["q", "m"])?;
            let (q, m) = (int(params, "q")?, int(params, "m")?);
            inert_prime(id, q)?;
            range(id, "m", m, if id == LineComplementInert { 3 } else { 2 }, 8)?;
            power(id, q, m, GAUSSIAN_MODULUS_CAP).map(drop)
        }
        GaussianSplitBipancyclic | LineGaussianSplit | ComplementSplitPancyclic => {
            expect_keys(id, params, &["p", "m"])?;
            let (p, m) = (int(params, "p")?, int(params, "m")?);
            split_prime(id, p)?;
            range(id, "m", m, 1, 8)?;
            power(id, p, m, GAUSSIAN_MODULUS_CAP).map(drop)
        }
        InertProductBipartite => {
            expect_keys(id, params, &["q1", "q2"])?;
            let (a, b) = (int(params, "q1")?, int(params, "q2")?);
            inert_prime(id, a)?;
            inert_prime(id, b)?;
            if a >= b {
                return Err(reject(id, "requires q1 < q2"));
            }
            if a * b > GAUSSIAN_MODULUS_CAP {
                return Err(reject(id, format!("q1·q2 exceeds the supported modulus {GAUSSIAN_MODULUS_CAP}")));
            }
            Ok(())
        }
        CutCertificateSoundness | LineDegreeSumCondition | LineDiameterCondition | RGraphLinePancyclic
        | FanHamiltonian => {
            expect_keys(id, params, &["max_order"])?;
            range(id, "max_order", int(params, "max_order")?, 4, 12)
        }
        SquarefreeNotHamiltonian => {
            expect_keys(id, params, &["n"])?;
            let n = int(params, "n")?;
            range(id, "n", n, 2, INTEGER_MODULUS_CAP)?;
            let f = factorize(n);
            if f.len() < 2 || f.iter().any(|x| x.exponent > 1) {
                return Err(reject(id, format!("n = {n} must be a product of at least two distinct primes")));
            }
            Ok(())
        }
        PrimePowerHamiltonian | PrimePowerPancyclic | LinePrimePowerPancyclic => {
            expect_keys(id, params, &["p", "m"])?;
            let (p, m) = (int(params, "p")?, int(params, "m")?);
            if !is_prime(p) || p < 5 {
                return Err(reject(id, format!("p = {p} must be a prime >= 5")));
            }
            let hi = if id == LinePrimePowerPancyclic { 3 } else { 8 };
            range(id, "m", m, 2, hi)?;
            power(id, p, m, INTEGER_MODULUS_CAP).map(drop)
        }
        TwoPrimeSquaresNotHamiltonian | LineSemiprimePancyclic => {
            expect_keys(id, params, &["p", "q"])?;
            let (p, q) = (int(params, "p")?, int(params, "q")?);
            if !is_prime(p) || !is_prime(q) || p >= q {
                return Err(reject(id, "requires primes p < q"));
            }
            if id == LineSemiprimePancyclic {
                if (p, q) == (2, 3) {
                    return Err(reject(id, "(p, q) = (2, 3) gives L(Γ(Z_6)) = K_2, which has no cycles"));
                }
                if (p - 1) * (q - 1) > 3000 {
                    return Err(reject(id, "line graph would exceed 3000 vertices"));
                }
            } else {
                power(id, p * q, 2, INTEGER_MODULUS_CAP)?;
            }
            Ok(())
        }
        ProductBipancyclic => {
            expect_keys(id, params, &["left", "right"])?;
            parse_table_ring(text(params, "left")?).map_err(|e| reject(id, e.to_string()))?;
            parse_table_ring(text(params, "right")?).map_err(|e| reject(id, e.to_string()))?;
            Ok(())
        }
        ProductExample => expect_keys(id, params, &[]),
        ComplementIsolatedVertex | DegenerateComplements => {
            let m = int(params, "m")?;
            if params.contains_key("t") {
                expect_keys(id, params, &["t", "m"])?;
                if int(params, "t")? != 2 {
                    return Err(reject(id, "t must be 2"));
                }
                let lo = if id == DegenerateComplements { 1 } else { 2 };
                range(id, "m", m, lo, 5)
            } else {
                expect_keys(id, params, &["q", "m"])?;
                let q = int(params, "q")?;
                inert_prime(id, q)?;
                range(id, "m", m, 2, 8)?;
                power(id, q, m, GAUSSIAN_MODULUS_CAP).map(drop)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hypotheses_are_enforced() {
        let t22 = CheckId::GaussianInertPancyclic;
        assert!(validate_params(t22, &ints(&[("q", 3), ("m", 2)])).is_ok());
        assert!(validate_params(t22, &ints(&[("q", 5), ("m", 2)])).is_err());
        assert!(validate_params(t22, &ints(&[("q", 3)])).is_err());
        assert!(validate_params(t22, &ints(&[("q", 3), ("m", 2), ("x", 1)])).is_err());
        let t23 = CheckId::GaussianSplitBipancyclic;
        assert!(validate_params(t23, &ints(&[("p", 7), ("m", 1)])).is_err());
        let l25 = CheckId::SquarefreeNotHamiltonian;
        assert!(validate_params(l25, &ints(&[("n", 12)])).is_err());
        assert!(validate_params(l25, &ints(&[("n", 7)])).is_err());
        let t33 = CheckId::LineSemiprimePancyclic;
        assert!(validate_params(t33, &ints(&[("p", 2), ("q", 3)])).is_err());
        assert!(validate_params(t33, &ints(&[("p", 5), ("q", 3)])).is_err());
    }

    #[test]
    fn ring_names() {
        assert_eq!(parse_table_ring("F4").unwrap().size(), 4);
        assert_eq!(parse_table_ring("Z2xZ2").unwrap().size(), 4);
        assert!(parse_table_ring("F6").is_err());
        assert!(parse_table_ring("Q3").is_err());
        assert!(parse_table_ring("").is_err());
    }

    #[test]
    fn params_serialize_as_a_flat_object() {
        let p = ints(&[("q", 3), ("m", 2)]);
        assert_eq!(serde_json::to_string(&p).unwrap(), r#"{"m":2,"q":3}"#);
        let r = texts(&[("left", "F4")]);
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"left":"F4"}"#);
    }
}
