use zdg_core::suite::{
    grid, run_all, run_check, run_point, CheckId, ClaimStatus, Conclusion, Fault, Options, ParamValue, Params,
    Profile,
};

fn quiet(profile: Profile) -> Options {
    Options { timing: false, profile, ..Options::default() }
}

fn params(pairs: &[(&str, u64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), ParamValue::Int(v))).collect()
}

#[test]
fn coverage_table() {
    let ids: Vec<&str> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
    assert_eq!(
        ids,
        [
            "T2.1", "T2.2", "T2.3", "R2.Q1Q2", "P2.4", "L2.5", "L2.6", "T2.7", "T2.8", "T2.9", "E2.10", "P3.1", "C3.2",
            "T3.3", "T3.4", "L3.6", "T3.7", "T3.8", "T3.9", "R4.ISO", "T4.1", "T4.2", "R4.QM", "R5.DEG", "T5.1", "T5.2",
        ]
    );
}

#[test]
fn smoke_profile_confirms_everything() {
    let suite = run_all(&quiet(Profile::Smoke));
    assert_eq!(suite.refuted, 0);
    assert_eq!(suite.undecided, 0);
    assert_eq!(suite.confirmed, suite.reports.len());
    let covered: std::collections::BTreeSet<CheckId> = suite.reports.iter().map(|r| r.check).collect();
    assert_eq!(covered.len(), CheckId::ALL.len());
}

#[test]
fn reports_are_deterministic() {
    let a = serde_json::to_string(&run_all(&quiet(Profile::Smoke))).unwrap();
    let b = serde_json::to_string(&run_all(&quiet(Profile::Smoke))).unwrap();
    assert_eq!(a, b);
}

#[test]
fn confirmed_means_every_claim_holds() {
    for budget in [1, 100, 10_000] {
        let opts = Options { budget, ..quiet(Profile::Smoke) };
        for r in run_all(&opts).reports {
            let all_hold = r.claims.values().all(|&s| s == ClaimStatus::Holds);
            assert_eq!(r.conclusion == Conclusion::Confirmed, all_hold && !r.claims.is_empty(), "{} {:?}", r.check, r.params);
            if r.claims.values().any(|&s| s == ClaimStatus::Fails) {
                assert_eq!(r.conclusion, Conclusion::Refuted);
            }
        }
    }
}

#[test]
fn exhausted_budget_gives_undecided() {
    let opts = Options { budget: 1, ..quiet(Profile::Standard) };
    let r = run_point(CheckId::GaussianTwoPowerNotPancyclic, &params(&[("m", 2)]), &opts).unwrap();
    assert_eq!(r.conclusion, Conclusion::Undecided);
    assert_eq!(r.claims["no Hamiltonian cycle (exhaustive search)"], ClaimStatus::Unknown);
}

#[test]
fn fault_injection_is_caught() {
    let opts = Options { fault: Some(Fault::default_injection()), ..quiet(Profile::Smoke) };
    let suite = run_all(&opts);
    assert!(suite.refuted >= 1);
    let refuted: Vec<_> = suite.reports.iter().filter(|r| r.conclusion == Conclusion::Refuted).collect();
    for r in &refuted {
        assert!(!r.witnesses.is_empty(), "{} has no witness", r.check);
        assert!(r.reason.as_deref().is_some_and(|s| s.starts_with("failed")));
    }
    let t22 = refuted.iter().find(|r| r.check == CheckId::GaussianInertPancyclic).unwrap();
    assert!(t22.witnesses.keys().any(|k| k.contains("first non-adjacent pair")));
}

#[test]
fn report_json_shape() {
    let r = run_point(CheckId::GaussianInertPancyclic, &params(&[("q", 3), ("m", 2)]), &quiet(Profile::Standard)).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["check"], "T2.2");
    assert_eq!(v["params"], serde_json::json!({ "q": 3, "m": 2 }));
    assert_eq!(v["conclusion"], "confirmed");
    assert_eq!(v["ms"], 0);
    for key in ["hypotheses", "witnesses", "claims", "tier"] {
        assert!(v.get(key).is_some(), "{key}");
    }
}

#[test]
fn iff_directions_are_both_exercised() {
    let opts = quiet(Profile::Standard);
    let reports = run_check(CheckId::GaussianInertPancyclic, &grid(CheckId::GaussianInertPancyclic, Profile::Standard), &opts).unwrap();
    let at = |m| reports.iter().find(|r| r.params["q"] == ParamValue::Int(3) && r.params["m"] == ParamValue::Int(m)).unwrap();
    assert_eq!(at(2).claims["pancyclic"], ClaimStatus::Holds);
    assert_eq!(at(3).claims["not pancyclic"], ClaimStatus::Holds);
    assert!(reports.iter().all(|r| r.conclusion == Conclusion::Confirmed));
}

#[test]
fn inadmissible_parameters_are_rejected() {
    let opts = quiet(Profile::Standard);
    assert!(run_point(CheckId::GaussianInertPancyclic, &params(&[("q", 5), ("m", 2)]), &opts).is_err());
    assert!(run_point(CheckId::GaussianSplitBipancyclic, &params(&[("p", 7), ("m", 1)]), &opts).is_err());
    assert!(run_point(CheckId::GaussianTwoPowerNotPancyclic, &params(&[("m", 2), ("q", 3)]), &opts).is_err());
    assert!("X1.1".parse::<CheckId>().is_err());
}
