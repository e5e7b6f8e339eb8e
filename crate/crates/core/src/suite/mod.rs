//! Executable checks of the pancyclicity results for zero-divisor graphs,
//! each evaluated on a finite parameter grid and reported with witnesses.

mod checks;
pub mod corpus;
mod params;
mod render;

use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use params::{grid, validate_params, ParamValue, Params};
pub use render::render_table;

use crate::cycles::DEFAULT_BUDGET;
use crate::error::{Error, Result};

macro_rules! check_ids {
    ($($variant:ident => $id:literal, $statement:literal;)+) => {
        /// Identifier of one executable check.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum CheckId {
            $($variant,)+
        }

        impl CheckId {
            pub const ALL: &'static [CheckId] = &[$(CheckId::$variant,)+];

            pub fn as_str(&self) -> &'static str {
                match self {
                    $(CheckId::$variant => $id,)+
                }
            }

            /// One-line statement of the claim under test.
            pub fn statement(&self) -> &'static str {
                match self {
                    $(CheckId::$variant => $statement,)+
                }
            }
        }

        impl FromStr for CheckId {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($id => Ok(CheckId::$variant),)+
                    other => Err(Error::UnknownCheck(other.to_string())),
                }
            }
        }
    };
}

check_ids! {
    GaussianTwoPowerNotPancyclic => "T2.1", "Γ(Z_{2^m}[i]) is not pancyclic for m > 1";
    GaussianInertPancyclic => "T2.2", "Γ(Z_{q^m}[i]) is pancyclic iff m = 2";
    GaussianSplitBipancyclic => "T2.3", "Γ(Z_{p^m}[i]) is bipancyclic iff m = 1";
    InertProductBipartite => "R2.Q1Q2", "Γ(Z_{q1 q2}[i]) = K_{q1²-1, q2²-1}, neither pancyclic nor bipancyclic";
    CutCertificateSoundness => "P2.4", "a Hamiltonian graph has c(G - S) <= |S| for every proper nonempty S";
    SquarefreeNotHamiltonian => "L2.5", "Γ(Z_n) is not Hamiltonian for squarefree n with at least two primes";
    PrimePowerHamiltonian => "L2.6", "Γ(Z_{p^m}) is Hamiltonian iff m = 2";
    PrimePowerPancyclic => "T2.7", "Γ(Z_{p^m}) is pancyclic iff m = 2";
    TwoPrimeSquaresNotHamiltonian => "T2.8", "Γ(Z_{p² q²}) is not Hamiltonian";
    ProductBipancyclic => "T2.9", "Γ(R1 × R2) is bipancyclic iff R1, R2 are integral domains of equal order";
    ProductExample => "E2.10", "Γ(Z_3 × Z_5) = K_{2,4} has no 6-cycle";
    LineDegreeSumCondition => "P3.1", "connected bridgeless G with deg(u)+deg(v) >= (2n+1)/3 on edges, not C_4/C_5, has pancyclic L(G)";
    LineDiameterCondition => "C3.2", "diameter <= 2 and order >= 4 imply L(G) Hamiltonian";
    LineSemiprimePancyclic => "T3.3", "L(Γ(Z_{pq})) is pancyclic for primes p < q";
    LinePrimePowerPancyclic => "T3.4", "L(Γ(Z_{p^m})) is pancyclic for p > 3, m = 2, 3";
    RGraphLinePancyclic => "L3.6", "an R-graph of order >= 5 has a pancyclic line graph";
    LineGaussianTwoPower => "T3.7", "L(Γ(Z_{2^m}[i])) is pancyclic for m >= 2";
    LineGaussianInert => "T3.8", "L(Γ(Z_{q^m}[i])) is pancyclic for m >= 2";
    LineGaussianSplit => "T3.9", "L(Γ(Z_{p^m}[i])) is pancyclic iff m = 1";
    ComplementIsolatedVertex => "R4.ISO", "complements of Γ(Z_{2^m}[i]) and Γ(Z_{q^m}[i]) have isolated vertices";
    FanHamiltonian => "T4.1", "2-connected, n > 3, d(u,v) = 2 => max(deg) >= n/2 implies Hamiltonian";
    ComplementSplitPancyclic => "T4.2", "complement of Γ(Z_{p^m}[i]) is pancyclic for m > 1";
    ComplementInertNotPancyclic => "R4.QM", "complement of Γ(Z_{q^m}[i]) is never pancyclic";
    DegenerateComplements => "R5.DEG", "degenerate complements: K_1, edgeless, one nontrivial component H";
    LineComplementTwoPower => "T5.1", "L(complement of Γ(Z_{2^m}[i])) is pancyclic for m >= 2";
    LineComplementInert => "T5.2", "L(complement of Γ(Z_{q^m}[i])) is pancyclic for m >= 3";
}

impl Serialize for CheckId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

impl<'de> Deserialize<'de> for CheckId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl std::fmt::Display for CheckId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Profile {
    Smoke,
    #[default]
    Standard,
    Extended,
}

impl FromStr for Profile {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smoke" => Ok(Profile::Smoke),
            "standard" => Ok(Profile::Standard),
            "extended" => Ok(Profile::Extended),
            other => Err(Error::Parse(format!("unknown profile `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Conclusion {
    Confirmed,
    Refuted,
    Undecided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClaimStatus {
    Holds,
    Fails,
    Unknown,
}

/// Kind of evidence a report rests on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    /// Closed-form recognition or exact counts.
    Exact,
    /// Every cycle length decided.
    FullSpectrum,
    /// Selected lengths found, plus validated hypotheses of a sufficient condition.
    Sampled,
    /// Validated hypotheses of a sufficient condition only.
    Hypothesis,
    /// Implication checked over a graph corpus.
    Corpus,
}

/// Copy of `Γ(Z_n[i])` to corrupt before any check sees it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fault {
    pub n: u64,
    /// Vertex indices whose adjacency is flipped.
    pub u: usize,
    pub v: usize,
}

impl Fault {
    /// Flips the first pair of `Γ(Z_9[i])`.
    pub fn default_injection() -> Self {
        Fault { n: 9, u: 0, v: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub budget: u64,
    /// Record wall time in reports; off gives byte-identical output.
    pub timing: bool,
    pub fault: Option<Fault>,
    pub profile: Profile,
}

impl Default for Options {
    fn default() -> Self {
        Options { budget: DEFAULT_BUDGET, timing: true, fault: None, profile: Profile::Standard }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: CheckId,
    pub statement: String,
    pub params: Params,
    pub hypotheses: BTreeMap<String, bool>,
    pub claims: BTreeMap<String, ClaimStatus>,
    pub conclusion: Conclusion,
    pub reason: Option<String>,
    pub witnesses: BTreeMap<String, serde_json::Value>,
    pub notes: Vec<String>,
    pub tier: Tier,
    pub ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub profile: Profile,
    pub budget: u64,
    pub confirmed: usize,
    pub refuted: usize,
    pub undecided: usize,
    pub reports: Vec<VerificationReport>,
}

impl SuiteReport {
    pub fn from_reports(profile: Profile, budget: u64, mut reports: Vec<VerificationReport>) -> Self {
        sort_reports(&mut reports);
        let count = |c| reports.iter().filter(|r| r.conclusion == c).count();
        SuiteReport {
            profile,
            budget,
            confirmed: count(Conclusion::Confirmed),
            refuted: count(Conclusion::Refuted),
            undecided: count(Conclusion::Undecided),
            reports,
        }
    }
}

fn sort_reports(reports: &mut [VerificationReport]) {
    reports.sort_by(|a, b| (a.check, &a.params).cmp(&(b.check, &b.params)));
}

/// Runs one check at one parameter point.
pub fn run_point(id: CheckId, params: &Params, opts: &Options) -> Result<VerificationReport> {
    validate_params(id, params)?;
    let start = Instant::now();
    let mut report = checks::run(id, params, opts)?;
    report.ms = if opts.timing { start.elapsed().as_millis() as u64 } else { 0 };
    Ok(report)
}

/// Runs one check at each point, in parallel, sorted by parameters.
pub fn run_check(id: CheckId, points: &[Params], opts: &Options) -> Result<Vec<VerificationReport>> {
    for p in points {
        validate_params(id, p)?;
    }
    let mut reports = points.par_iter().map(|p| run_point(id, p, opts)).collect::<Result<Vec<_>>>()?;
    sort_reports(&mut reports);
    Ok(reports)
}

/// Every check over the grid of `opts.profile`.
pub fn run_all(opts: &Options) -> SuiteReport {
    let jobs: Vec<(CheckId, Params)> =
        CheckId::ALL.iter().flat_map(|&id| grid(id, opts.profile).into_iter().map(move |p| (id, p))).collect();
    let reports = jobs
        .par_iter()
        .map(|(id, p)| run_point(*id, p, opts).expect("grid points are admissible"))
        .collect();
    SuiteReport::from_reports(opts.profile, opts.budget, reports)
}
