//! Independent checks of the engine: a literal all-subsets enumeration of the
//! candidate set, the rank-2 classification law, and invariance under Weyl
//! transport and Gram scaling.
//!
//! Only the geometry primitives are shared with the engine; subset selection,
//! half-space counting and orbit deduplication are redone here.

pub mod random;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};

use crate::engine::{Engine, EngineOptions, NullconeSummary, SubProblem};
use crate::error::{Error, Result};
use crate::geometry::{in_hull, QVec};
use crate::rational::{one, Rat};
use crate::root_data::{Problem, ValidatedProblem};

pub const DEFAULT_NAIVE_BOUND: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    Engine,
    Oracle,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Source::Engine => "engine",
            Source::Oracle => "oracle",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleReport {
    pub candidate_set_match: bool,
    /// Vectors found by only one side.
    pub mismatches: Vec<(QVec, Source)>,
    pub law_violations: Vec<String>,
}

impl OracleReport {
    pub fn clean() -> Self {
        OracleReport {
            candidate_set_match: true,
            ..Default::default()
        }
    }

    pub fn is_clean(&self) -> bool {
        self.candidate_set_match && self.mismatches.is_empty() && self.law_violations.is_empty()
    }

    pub fn merge(&mut self, other: OracleReport) {
        self.candidate_set_match &= other.candidate_set_match;
        self.mismatches.extend(other.mismatches);
        self.law_violations.extend(other.law_violations);
        if !self.law_violations.is_empty() {
            self.candidate_set_match = false;
        }
    }
}

/// Every nonempty weight subset `M`, tested against the defining conditions
/// one by one, then deduplicated exactly and (optionally) up to the Weyl group.
pub fn naive_candidates_of(sub: &SubProblem, bound: usize, weyl_dedup: bool) -> Result<Vec<QVec>> {
    let n = sub.weights.len();
    if n > bound {
        return Err(Error::TooLarge {
            what: "distinct weights for the naive oracle",
            count: n,
            bound,
        });
    }
    let one = one();
    let mut found = BTreeSet::new();
    for mask in 1u64..(1u64 << n) {
        let m: Vec<QVec> = (0..n)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| sub.weights[i].v.clone())
            .collect();
        let p = sub.space.perp(&m)?;
        if p.is_zero() {
            continue;
        }
        let l = p.scale(&sub.space.norm2(&p).recip());
        // M must be exactly the weights on {l = 1}.
        let saturated = (0..n).all(|i| (mask >> i & 1 == 1) == (sub.space.dot(&l, &sub.weights[i].v) == one));
        if !saturated || !in_hull(&p, &m) {
            continue;
        }
        let (lhs, rhs) = naive_counts(sub, &l);
        if lhs <= rhs {
            found.insert(l);
        }
    }
    if !weyl_dedup {
        return Ok(found.into_iter().collect());
    }
    let mut reps = BTreeSet::new();
    for l in &found {
        let orbit = sub.weyl.orbit(&sub.space, l)?;
        reps.insert(orbit.into_iter().max().expect("nonempty orbit"));
    }
    Ok(reps.into_iter().collect())
}

pub fn naive_candidates(problem: &ValidatedProblem) -> Result<Vec<QVec>> {
    naive_candidates_of(&SubProblem::from_problem(problem), DEFAULT_NAIVE_BOUND, true)
}

fn naive_counts(sub: &SubProblem, l: &QVec) -> (u64, u64) {
    let lhs = sub.roots.iter().filter(|a| sub.space.dot(l, a) < Rat::zero()).count() as u64;
    let rhs = sub
        .weights
        .iter()
        .filter(|w| sub.space.dot(l, &w.v) < one())
        .map(|w| w.mult)
        .sum();
    (lhs, rhs)
}

/// Rank-2 law: a candidate fails to be stratifying iff its line `{l = 1}` is
/// parallel to a root and carries exactly two weights, each of multiplicity one.
pub fn rank2_predicate(sub: &SubProblem, l: &QVec) -> Result<bool> {
    if sub.rank() != 2 {
        return Err(Error::input(format!("rank-2 law needs rank 2, got {}", sub.rank())));
    }
    let parallel = sub.roots.iter().any(|a| sub.space.dot(l, a).is_zero());
    let on_line: Vec<u64> = sub
        .weights
        .iter()
        .filter(|w| sub.space.dot(l, &w.v) == one())
        .map(|w| w.mult)
        .collect();
    Ok(parallel && on_line == [1, 1])
}

/// Engine candidate set versus the naive oracle, under the same dedup policy.
pub fn compare_candidates(problem: &ValidatedProblem, weyl_dedup: bool) -> Result<OracleReport> {
    let sub = SubProblem::from_problem(problem);
    let engine: BTreeSet<QVec> = crate::candidates::enumerate_candidates(
        &sub,
        crate::candidates::EnumerationOptions { weyl_dedup },
    )?
    .into_iter()
    .map(|c| c.l)
    .collect();
    let oracle: BTreeSet<QVec> = naive_candidates_of(&sub, DEFAULT_NAIVE_BOUND, weyl_dedup)?
        .into_iter()
        .collect();
    let mut report = OracleReport::clean();
    for l in engine.difference(&oracle) {
        report.mismatches.push((l.clone(), Source::Engine));
    }
    for l in oracle.difference(&engine) {
        report.mismatches.push((l.clone(), Source::Oracle));
    }
    report.candidate_set_match = report.mismatches.is_empty();
    Ok(report)
}

/// Checks the rank-2 law against a computed summary.
pub fn rank2_report(problem: &ValidatedProblem, summary: &NullconeSummary) -> Result<OracleReport> {
    let sub = SubProblem::from_problem(problem);
    let mut report = OracleReport::clean();
    for c in &summary.candidates {
        let predicted_excluded = rank2_predicate(&sub, &c.candidate.l)?;
        if predicted_excluded == c.stratifying {
            report.law_violations.push(format!(
                "rank-2 law: candidate {} engine stratifying = {}, law says {}",
                c.candidate.l, c.stratifying, !predicted_excluded
            ));
        }
    }
    report.candidate_set_match = report.law_violations.is_empty();
    Ok(report)
}

/// Structural checks on every tree: sign rule, plus-child uniqueness, depth.
pub fn tree_report(summary: &NullconeSummary) -> OracleReport {
    let mut report = OracleReport::clean();
    for c in &summary.candidates {
        report.law_violations.extend(c.tree.violations());
        if c.tree.height() + 1 > summary.rank {
            report.law_violations.push(format!(
                "tree of {} has {} levels, more than the rank {}",
                c.candidate.l,
                c.tree.height() + 1,
                summary.rank
            ));
        }
    }
    let open = summary.strata.iter().filter(|s| s.is_open_in_v).count();
    if open > 1 {
        report.law_violations.push(format!("{open} strata claim to be open in V"));
    }
    for s in &summary.strata {
        if s.dimension > summary.dim_v || (s.dimension == summary.dim_v) != s.is_open_in_v {
            report.law_violations.push(format!(
                "stratum {} has dimension {} against dim V = {} (open = {})",
                s.l, s.dimension, summary.dim_v, s.is_open_in_v
            ));
        }
    }
    report.candidate_set_match = report.law_violations.is_empty();
    report
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Transform {
    /// Apply the given Weyl generator to every root and weight.
    WeylGenerator(usize),
    /// Multiply the Gram form by a positive rational.
    GramScale(Rat),
}

impl fmt::Display for Transform {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Transform::WeylGenerator(k) => write!(f, "Weyl generator {k}"),
            Transform::GramScale(c) => write!(f, "gram x {}", crate::rational::format_rat(c)),
        }
    }
}

/// The data that must not change under a transform.
fn invariants(s: &NullconeSummary) -> (Vec<u64>, u64, bool) {
    (s.stratum_dimensions(), s.dim_nullcone, s.equals_v)
}

pub fn transform_problem(problem: &ValidatedProblem, t: &Transform) -> Result<Problem> {
    let raw = problem.to_problem();
    Ok(match t {
        Transform::WeylGenerator(k) => {
            let g = problem
                .weyl
                .generators
                .get(*k)
                .ok_or_else(|| Error::input(format!("no Weyl generator {k}")))?;
            raw.transported(|v| g.apply(&problem.space, v))
        }
        Transform::GramScale(c) => {
            if !c.is_positive() {
                return Err(Error::input("gram scale factor must be positive"));
            }
            raw.with_scaled_gram(c)
        }
    })
}

/// Stratifies the original and the transformed problem and compares the
/// dimension multiset, the null-cone dimension, and whether `N = V`.
pub fn invariance_harness(problem: &ValidatedProblem, t: &Transform, opts: EngineOptions) -> Result<OracleReport> {
    let moved = transform_problem(problem, t)?
        .validate()
        .map_err(Error::Invalid)?;
    let before = Engine::new(opts).stratify(problem)?;
    let after = Engine::new(opts).stratify(&moved)?;
    let mut report = OracleReport::clean();
    if invariants(&before) != invariants(&after) {
        report.law_violations.push(format!(
            "{t}: (dims, dim N, N = V) changed from {:?} to {:?}",
            invariants(&before),
            invariants(&after)
        ));
        report.candidate_set_match = false;
    }
    Ok(report)
}

/// The standard transforms: every Weyl generator and gram scalings by 2, 1/3, 7.
pub fn standard_transforms(problem: &ValidatedProblem) -> Vec<Transform> {
    let mut ts: Vec<Transform> = (0..problem.weyl.generators.len()).map(Transform::WeylGenerator).collect();
    for (n, d) in [(2, 1), (1, 3), (7, 1)] {
        ts.push(Transform::GramScale(crate::rational::ratio(n, d)));
    }
    ts
}

/// Everything the oracle can check for one problem. The naive comparison is
/// skipped (and noted) when the weight count exceeds its bound.
pub fn verify(problem: &ValidatedProblem, opts: EngineOptions) -> Result<(OracleReport, Vec<String>)> {
    let mut notes = Vec::new();
    let mut report = OracleReport::clean();
    if problem.weights.len() <= DEFAULT_NAIVE_BOUND {
        report.merge(compare_candidates(problem, !opts.no_dedup)?);
    } else {
        notes.push(format!(
            "naive candidate oracle skipped: {} distinct weights exceed the bound {DEFAULT_NAIVE_BOUND}",
            problem.weights.len()
        ));
    }
    let engine = Engine::new(opts);
    let summary = engine.stratify(problem)?;
    report.merge(tree_report(&summary));
    if problem.rank() == 2 && !opts.no_dedup {
        report.merge(rank2_report(problem, &summary)?);
    }
    if opts.fast {
        let full = Engine::new(EngineOptions { fast: false, ..opts }).stratify(problem)?;
        if full != summary {
            report.law_violations.push("fast mode disagrees with full tree computation".into());
        }
    }
    for t in standard_transforms(problem) {
        report.merge(invariance_harness(problem, &t, opts)?);
    }
    report.candidate_set_match = report.mismatches.is_empty() && report.law_violations.is_empty();
    Ok((report, notes))
}

/// Multiset of weights as a map, for comparing problems irrespective of order.
pub fn weight_multiset(problem: &ValidatedProblem) -> BTreeMap<QVec, u64> {
    problem.weights.iter().map(|w| (w.v.clone(), w.mult)).collect()
}
