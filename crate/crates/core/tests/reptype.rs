mod common;

use common::{bundled, field, thicken};
use eirep_core::corpus;
use eirep_core::reptype::{classify, recheck, ClassifyOptions, OracleMode, RepTypeVerdict, RuleId, Verdict};
use eirep_core::{FiniteCategory, Group};

use Verdict::{Finite, Infinite, Unknown};

fn run(c: &FiniteCategory, p: u32) -> RepTypeVerdict {
    classify(c, &field(p), &ClassifyOptions::default()).unwrap()
}

fn quick() -> ClassifyOptions {
    ClassifyOptions { oracle: OracleMode::Off, ..ClassifyOptions::default() }
}

/// Finite block witnesses list every block; infinite ones name a single block.
fn block_entry(w: &serde_json::Value) -> &serde_json::Value {
    w.as_array().map_or(w, |a| &a[0])
}

const EXPECTED: &[(&str, u32, Verdict)] = &[
    ("case1", 2, Finite),
    ("case2", 2, Finite),
    ("case3", 2, Finite),
    ("case4", 2, Finite),
    ("case5", 2, Infinite),
    ("case1", 3, Finite),
    ("case2", 3, Finite),
    ("case3", 3, Finite),
    ("case4", 3, Finite),
    ("case5", 3, Infinite),
    ("z2_z3_three", 2, Infinite),
    ("z2_z3_three", 3, Finite),
    ("z2_z3_three", 5, Finite),
    ("c", 2, Infinite),
    ("c_prime", 2, Finite),
    ("kronecker", 2, Infinite),
    ("square", 2, Infinite),
    ("diamond", 2, Unknown),
    ("a2", 2, Finite),
];

#[test]
fn corpus_verdicts() {
    for &(name, p, want) in EXPECTED {
        let v = run(&bundled(name), p);
        assert_eq!(v.verdict, want, "{name} at {p}: {:?}", v.attempted);
        assert!(!v.conflict, "{name} at {p}");
        if want == Unknown {
            assert_eq!(v.attempted.len(), RuleId::ALL.len());
            assert!(v.attempted.iter().all(|a| !a.reason.is_empty()));
        }
    }
}

#[test]
fn certificates_recheck_in_isolation() {
    for &(name, p, _) in EXPECTED {
        let c = bundled(name);
        let v = run(&c, p);
        for cert in &v.supporting {
            assert!(recheck(&c, &field(p), cert).unwrap(), "{name} at {p}: {}", cert.rule);
        }
    }
}

#[test]
fn tampered_witness_is_rejected() {
    let c = bundled("case5");
    let v = run(&c, 2);
    let mut cert = v.certificate_for(RuleId::String).unwrap().clone();
    cert.witness["band"] = serde_json::json!([]);
    assert!(!recheck(&c, &field(2), &cert).unwrap());
}

#[test]
fn case5_rules() {
    let c = bundled("case5");
    let v = run(&c, 2);
    assert_eq!(v.rule, Some(RuleId::FreeAction));
    let w = &v.certificate().unwrap().witness;
    assert!(w["stabilizers"].as_array().unwrap().iter().all(|s| s == 1));
    assert_eq!(v.certificate_for(RuleId::String).unwrap().verdict, Infinite);

    let v = run(&c, 3);
    let hered = v.certificate_for(RuleId::CoprimeHereditary).unwrap();
    assert!(hered.summary.contains("~A3"), "{}", hered.summary);
}

#[test]
fn two_simples_parameters_of_c_and_c_prime() {
    let params = |name: &str| {
        let v = run(&bundled(name), 2);
        let cert = v.certificate_for(RuleId::TwoSimples).unwrap().clone();
        (cert.verdict, block_entry(&cert.witness)["parameters"].clone())
    };
    let (v, p) = params("c");
    assert_eq!(v, Infinite);
    assert_eq!((p["m"].as_u64(), p["n"].as_u64()), (Some(4), Some(4)));
    let (v, p) = params("c_prime");
    assert_eq!(v, Finite);
    assert_eq!((p["m"].as_u64(), p["n"].as_u64()), (Some(4), Some(1)));
}

#[test]
fn case1_char2_parameters_match_relations() {
    let v = run(&bundled("case1"), 2);
    let p = &block_entry(&v.certificate_for(RuleId::TwoSimples).unwrap().witness)["parameters"];
    // alpha^2 = gamma^2 = beta alpha = gamma beta = 0
    let got: Vec<_> = ["m", "n", "s", "t"].iter().map(|k| p[k].as_u64().unwrap()).collect();
    assert_eq!(got, [2, 1, 1, 2]);
}

#[test]
fn coprime_examples() {
    let v = run(&bundled("z2_z3_three"), 5);
    let hered = v.certificate_for(RuleId::CoprimeHereditary).unwrap();
    assert!(hered.summary.contains("A1") && hered.summary.contains("D4"), "{}", hered.summary);
    let v = run(&bundled("case4"), 3);
    assert_eq!(v.certificate_for(RuleId::CoprimeHereditary).unwrap().verdict, Finite);
}

#[test]
fn group_object_rule() {
    let z2 = Group::cyclic(2, "a", "1");
    let klein = FiniteCategory::from_group("x", &Group::direct_product(&z2, &z2));
    let v = classify(&klein, &field(2), &quick()).unwrap();
    assert_eq!((v.verdict, v.rule), (Infinite, Some(RuleId::GroupObjects)));

    let z4 = FiniteCategory::from_group("x", &Group::cyclic(4, "g", "1"));
    let v = classify(&z4, &field(2), &quick()).unwrap();
    assert_ne!(v.rule, Some(RuleId::GroupObjects));
    assert_eq!(v.verdict, Finite);

    let s3 = FiniteCategory::from_group("x", &Group::symmetric(3, "1"));
    let v = classify(&s3, &field(3), &quick()).unwrap();
    assert_ne!(v.rule, Some(RuleId::GroupObjects));
}

#[test]
fn parallel_kronecker_declines_on_one_orbit() {
    let v = run(&bundled("case2"), 2);
    assert!(v.certificate_for(RuleId::ParallelKronecker).is_none());
    let v = run(&bundled("kronecker"), 2);
    assert_eq!(v.rule, Some(RuleId::ParallelKronecker));
}

#[test]
fn oracle_rule_on_kronecker_only() {
    let opts = ClassifyOptions { oracle: OracleMode::Fixed { dims: vec![1, 1], budget: 1 << 20 }, ..Default::default() };
    let v = classify(&bundled("kronecker"), &field(2), &opts).unwrap();
    let w = &v.certificate_for(RuleId::OracleFamily).unwrap().witness;
    assert_eq!((w["count_q"].as_u64(), w["count_q2"].as_u64()), (Some(3), Some(5)));
    let v = classify(&bundled("a2"), &field(2), &opts).unwrap();
    assert!(v.certificate_for(RuleId::OracleFamily).is_none());
}

#[test]
fn chain_is_finite_by_endotrivialization() {
    let v = run(&corpus::chain(4), 2);
    assert_eq!(v.verdict, Finite);
    assert!(v.certificate_for(RuleId::Endotrivialization).is_some());
}

#[test]
fn skeletalization_does_not_change_verdicts() {
    for (name, p) in [("case1", 2), ("case5", 3), ("c_prime", 2), ("kronecker", 3)] {
        let c = bundled(name);
        let thick = thicken(&c, 1);
        assert!(!thick.is_skeletal());
        assert_eq!(run(&thick, p).verdict, run(&c, p).verdict, "{name}");
    }
}

#[test]
fn duality() {
    for &(name, p, want) in EXPECTED {
        let op = bundled(name).opposite();
        let v = run(&op, p);
        assert_eq!(v.verdict, want, "{name}^op at {p}: {:?}", v.attempted);
        assert!(!v.conflict);
    }
}

#[test]
fn two_object_corpus_has_no_conflicts() {
    let f = field(2);
    for (name, spec) in corpus::two_object_corpus(&[1, 2, 4], 4) {
        let c = spec.build().unwrap();
        let v = classify(&c, &f, &quick()).unwrap();
        assert!(!v.conflict, "{name}");
        for cert in &v.supporting {
            assert!(recheck(&c, &f, cert).unwrap(), "{name}: {}", cert.rule);
        }
    }
}

#[test]
fn verdict_json_shape() {
    let v = run(&bundled("case1"), 2);
    let j = serde_json::to_value(&v).unwrap();
    for k in ["verdict", "rule", "witness", "field", "notes"] {
        assert!(j.get(k).is_some(), "{k}");
    }
    assert_eq!(j["field"]["p"], 2);
}
