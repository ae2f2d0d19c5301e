use nullcone_core::candidates::{enumerate_candidates, verify_candidate, EnumerationOptions};
use nullcone_core::engine::{generic_representative, openness_check, stratum_dimension};
use nullcone_core::rational::ratio;
use nullcone_core::{parse_catalog_spec, stratify, Engine, EngineOptions, QVec, SubProblem, ValidatedProblem};

fn load(spec: &str) -> ValidatedProblem {
    parse_catalog_spec(spec).unwrap().validate().unwrap()
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

#[test]
fn binary_forms_mixed_degrees() {
    let p = load("sl2-forms:2,3,3,4,5");
    let s = stratify(&p).unwrap();
    assert_eq!(s.candidates.len(), 5);
    assert!(s.candidates.iter().all(|c| c.stratifying));
    assert_eq!(s.stratum_dimensions(), vec![2, 3, 6, 8, 11]);
    assert_eq!(s.dim_nullcone, 11);
    assert_eq!(s.dim_v, 22);
    assert!(!s.equals_v);
    // the stratum for the extreme weight 5ε sits at l = ε/5
    assert!(s.strata.iter().any(|st| st.l == QVec(vec![ratio(1, 5)]) && st.dimension == 2));
}

#[test]
fn ternary_quartics() {
    let p = load("sl3-forms:4");
    let s = stratify(&p).unwrap();
    assert_eq!(s.candidates.len(), 12);
    assert_eq!(s.candidates.iter().filter(|c| !c.stratifying).count(), 1);
    assert_eq!(s.stratum_dimensions(), sorted(vec![3, 8, 11, 7, 9, 5, 9, 10, 10, 7, 8]));
    assert_eq!(s.dim_nullcone, 11);
    assert_eq!(s.max_component_indices, vec![0]);
}

#[test]
fn g2_adjoint() {
    let p = load("g2-adjoint");
    let s = stratify(&p).unwrap();
    assert_eq!(s.candidates.len(), 6);
    assert_eq!(s.stratum_dimensions(), vec![6, 8, 10, 12]);
    assert_eq!(s.dim_nullcone, 12);
    assert_eq!(s.dim_v, 14);
    // the regular nilpotent stratum has a one-term representative
    let top = &s.strata[0];
    assert_eq!(top.dimension, 12);
    assert_eq!(top.generic_rep.terms.len(), top.support_v_l.iter().map(|&i| p.weights[i].mult).sum::<u64>() as usize);
}

#[test]
fn norm_changes_the_stratum_count() {
    assert_eq!(stratify(&load("gl2-ex3:2,1")).unwrap().strata.len(), 2);
    assert_eq!(stratify(&load("gl2-ex3:2,-1")).unwrap().strata.len(), 3);
    assert_eq!(stratify(&load("gl2-ex3:2,-1/2")).unwrap().strata.len(), 3);
}

#[test]
fn orthogonal_basis_merges_two_candidate_lines() {
    // With b = 0 the perpendicular foot on the line through ε₁ and ε₁+ε₂ is
    // ε₁ itself, so the candidate of {ε₁} and of {ε₁, ε₁+ε₂} are the same
    // vector and the stratum count drops to two.
    let s = stratify(&load("gl2-ex3:2,0")).unwrap();
    assert_eq!(s.candidates.len(), 3);
    assert_eq!(s.strata.len(), 2);
    assert!(s.equals_v);
}

#[test]
fn torus_candidates_all_stratify() {
    let p = load("torus:1,0;0,1;-1,-1;2,1");
    let s = stratify(&p).unwrap();
    assert!(!s.candidates.is_empty());
    assert!(s.candidates.iter().all(|c| c.stratifying && c.tree.children.is_empty()));
}

#[test]
fn adjoint_a1() {
    let p = load("adjoint:A1");
    let s = stratify(&p).unwrap();
    assert_eq!(s.candidates.len(), 1);
    let c = &s.candidates[0].candidate;
    // roots ±α with <α,α> = 2, so l = α/2
    assert_eq!(c.l, QVec(vec![ratio(1, 2)]));
    assert_eq!((c.counts.roots_negative, c.counts.weights_below_one), (1, 2));
    assert_eq!(stratum_dimension(&p, &c.l), 2);
    assert!(!openness_check(&p, &c.l));
    assert_eq!(s.dim_nullcone, 2);
}

#[test]
fn candidates_pass_independent_recheck() {
    for spec in ["sl2-forms:2,3,3,4,5", "sl3-forms:3", "g2-adjoint", "adjoint:B2", "gl2-ex3:3,1"] {
        let sub = SubProblem::from_problem(&load(spec));
        for c in enumerate_candidates(&sub, EnumerationOptions::default()).unwrap() {
            assert_eq!(verify_candidate(&sub, &c), Vec::<String>::new(), "{spec} {}", c.l);
        }
    }
}

#[test]
fn dedup_off_lists_whole_orbits() {
    let sub = SubProblem::from_problem(&load("g2-adjoint"));
    let all = enumerate_candidates(&sub, EnumerationOptions { weyl_dedup: false }).unwrap();
    let reps = enumerate_candidates(&sub, EnumerationOptions::default()).unwrap();
    assert!(all.len() > reps.len());
    for r in &reps {
        assert!(all.iter().any(|c| c.l == r.l));
    }
}

#[test]
fn fast_mode_agrees() {
    for spec in ["sl3-forms:4", "g2-adjoint", "gl2-ex3:2,1", "adjoint:A3", "sl2-forms:1,4"] {
        let p = load(spec);
        let full = Engine::new(EngineOptions::default()).stratify(&p).unwrap();
        let fast = Engine::new(EngineOptions { fast: true, ..Default::default() }).stratify(&p).unwrap();
        assert_eq!(full, fast, "{spec}");
    }
}

#[test]
fn trees_obey_sign_rule() {
    for spec in ["sl3-forms:4", "g2-adjoint", "adjoint:B3", "adjoint:A1xA1xA1"] {
        let s = stratify(&load(spec)).unwrap();
        for c in &s.candidates {
            assert!(c.tree.violations().is_empty(), "{spec}");
            assert!(c.tree.height() < s.rank);
        }
    }
}

#[test]
fn generic_representative_counts_terms() {
    let p = load("sl2-forms:2,3,3,4,5");
    // l = ε/3: V[l] is the weight 3, which occurs in F_3 twice and in F_5 once
    let rep = generic_representative(&p, &QVec(vec![ratio(1, 3)]));
    assert_eq!(rep.terms.len(), 3);
    assert_eq!(rep.terms[0].symbol, "c_1");
}
