use nullcone_core::oracle::random::{random_problems, Family};
use nullcone_core::oracle::{
    compare_candidates, invariance_harness, naive_candidates, rank2_predicate, rank2_report, standard_transforms,
    tree_report, verify, Transform,
};
use nullcone_core::rational::{rat, ratio};
use nullcone_core::{parse_catalog_spec, stratify, EngineOptions, QVec, SubProblem, ValidatedProblem};

const CATALOG: &[&str] = &[
    "sl2-forms:2,3,3,4,5",
    "sl2-forms:1",
    "sl3-forms:2",
    "sl3-forms:3",
    "sl3-forms:4",
    "gl2-ex3:2,1",
    "gl2-ex3:2,-1",
    "gl2-ex3:2,0",
    "g2-adjoint",
    "adjoint:A2",
    "adjoint:B2",
    "adjoint:A1xA1",
    "torus:1,0;0,1;-1,-1",
];

fn load(spec: &str) -> ValidatedProblem {
    parse_catalog_spec(spec).unwrap().validate().unwrap()
}

#[test]
fn catalog_matches_naive_enumeration() {
    for spec in CATALOG {
        let p = load(spec);
        for dedup in [true, false] {
            let r = compare_candidates(&p, dedup).unwrap();
            assert!(r.is_clean(), "{spec} dedup={dedup}: {:?}", r.mismatches);
        }
    }
}

#[test]
fn random_instances_match_naive_enumeration() {
    for (f, raw) in random_problems(2024, 60, &Family::ALL) {
        let p = raw.validate().unwrap();
        let r = compare_candidates(&p, true).unwrap();
        assert!(r.is_clean(), "{f:?} {raw:?}: {:?}", r.mismatches);
    }
}

#[test]
fn naive_oracle_refuses_large_inputs() {
    // sl3 quintics have 21 distinct weights
    assert!(naive_candidates(&load("sl3-forms:5")).unwrap_err().is_resource());
}

#[test]
fn rank2_law_on_examples() {
    let p = load("g2-adjoint");
    let s = stratify(&p).unwrap();
    assert!(rank2_report(&p, &s).unwrap().is_clean());
    let sub = SubProblem::from_problem(&p);
    // the line through β … 3α+β is parallel to α but carries four weights
    assert!(!rank2_predicate(&sub, &QVec(vec![ratio(1, 1), ratio(2, 3)])).unwrap());
    assert!(rank2_predicate(&SubProblem::from_problem(&load("sl2-forms:2")), &QVec(vec![ratio(1, 2)])).is_err());
}

#[test]
fn rank2_law_on_random_instances() {
    for (f, raw) in random_problems(77, 40, &Family::RANK2) {
        let p = raw.validate().unwrap();
        let s = stratify(&p).unwrap();
        let r = rank2_report(&p, &s).unwrap();
        assert!(r.is_clean(), "{f:?} {raw:?}: {:?}", r.law_violations);
    }
}

#[test]
fn trees_are_well_formed() {
    for spec in CATALOG {
        let s = stratify(&load(spec)).unwrap();
        assert!(tree_report(&s).is_clean(), "{spec}");
    }
}

#[test]
fn invariance_under_transport_and_scaling() {
    for spec in ["sl3-forms:3", "g2-adjoint", "gl2-ex3:3,-1", "adjoint:B2"] {
        let p = load(spec);
        for t in standard_transforms(&p) {
            let r = invariance_harness(&p, &t, EngineOptions::default()).unwrap();
            assert!(r.is_clean(), "{spec} {t}: {:?}", r.law_violations);
        }
    }
}

#[test]
fn nonpositive_scale_is_rejected() {
    let p = load("adjoint:A2");
    assert!(invariance_harness(&p, &Transform::GramScale(ratio(-1, 1)), EngineOptions::default()).is_err());
    assert!(invariance_harness(&p, &Transform::WeylGenerator(99), EngineOptions::default()).is_err());
}

#[test]
fn full_verification_is_clean() {
    let (r, notes) = verify(&load("sl3-forms:3"), EngineOptions { fast: true, ..Default::default() }).unwrap();
    assert!(r.is_clean(), "{r:?}");
    assert!(notes.is_empty());
    let (r, notes) = verify(&load("sl3-forms:5"), EngineOptions::default()).unwrap();
    assert!(r.is_clean());
    assert_eq!(notes.len(), 1);
}

#[test]
fn rank2_predicate_on_ternary_quartics() {
    let p = load("sl3-forms:4");
    let sub = SubProblem::from_problem(&p);
    let s = stratify(&p).unwrap();
    let flagged: Vec<_> = s
        .candidates
        .iter()
        .filter(|c| rank2_predicate(&sub, &c.candidate.l).unwrap())
        .collect();
    assert_eq!(flagged.len(), 1);
    assert!(!flagged[0].stratifying);
    // a Weyl image of the line through the monomials (1,3,0) and (0,3,1):
    // two single weights differing by a root
    let on_line: Vec<&QVec> = flagged[0].candidate.support.iter().map(|&i| &p.weights[i].v).collect();
    assert_eq!(on_line.len(), 2);
    assert!(sub.roots.contains(&(on_line[0] - on_line[1])));
    // root-parallel lines carrying three or more weights are not flagged
    let crowded = s.candidates.iter().find(|c| {
        c.candidate.support.len() >= 3 && sub.roots.iter().any(|a| sub.space.dot(&c.candidate.l, a) == rat(0))
    });
    let crowded = crowded.expect("some root-parallel line carries three weights");
    assert!(!rank2_predicate(&sub, &crowded.candidate.l).unwrap());
    assert!(crowded.stratifying);
}
