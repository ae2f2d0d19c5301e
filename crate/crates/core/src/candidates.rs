//! The finite candidate set: every `l = perp M / |perp M|²` where `M` is a
//! saturated weight set whose perpendicular foot is nonzero and lies in its
//! convex hull, and where the half-space count inequality holds.
//!
//! `M` always lies in the affine hyperplane `{l = 1}`, so it has an affinely
//! independent spanning subset of at most `rank` weights. Enumerating those
//! subsets is enough to reach every candidate.

use std::collections::BTreeSet;

use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::SubProblem;
use crate::error::Result;
use crate::geometry::{affinely_independent_subsets, in_hull, QVec};

/// Counts over the half-spaces cut out by `l`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfSpaceCounts {
    /// `#{α ∈ Φ : <l,α> < 0}`
    pub roots_negative: usize,
    /// `Σ dim V_μ` over `<l,μ> < 1`
    pub weights_below_one: u64,
    /// `Σ dim V_μ` over `<l,μ> ≥ 1`
    pub weights_at_least_one: u64,
}

impl HalfSpaceCounts {
    pub fn inequality_holds(&self) -> bool {
        self.roots_negative as u64 <= self.weights_below_one
    }

    pub fn is_equality(&self) -> bool {
        self.roots_negative as u64 == self.weights_below_one
    }

    pub fn stratum_dimension(&self) -> u64 {
        self.roots_negative as u64 + self.weights_at_least_one
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub l: QVec,
    /// Indices of the saturated weight set `M = Δ ∩ {l = 1}`.
    pub support: Vec<usize>,
    pub perp_point: QVec,
    pub counts: HalfSpaceCounts,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Keep one representative per Weyl orbit (the lexicographically greatest).
    pub weyl_dedup: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions { weyl_dedup: true }
    }
}

/// Indices of the weights on the hyperplane `{l = 1}`.
pub fn saturate(sub: &SubProblem, l: &QVec) -> Vec<usize> {
    let one = crate::rational::one();
    sub.weights
        .iter()
        .enumerate()
        .filter(|(_, w)| sub.space.dot(l, &w.v) == one)
        .map(|(i, _)| i)
        .collect()
}

pub fn half_space_counts(sub: &SubProblem, l: &QVec) -> HalfSpaceCounts {
    let roots_negative = sub
        .roots
        .iter()
        .filter(|a| sub.space.dot(l, a).is_negative())
        .count();
    let one = crate::rational::one();
    let (mut below, mut above) = (0, 0);
    for w in &sub.weights {
        if sub.space.dot(l, &w.v) < one {
            below += w.mult;
        } else {
            above += w.mult;
        }
    }
    HalfSpaceCounts {
        roots_negative,
        weights_below_one: below,
        weights_at_least_one: above,
    }
}

/// `(lhs, rhs, lhs <= rhs)` for the inequality that every stratifying element obeys.
pub fn check_balance_inequality(sub: &SubProblem, l: &QVec) -> (usize, u64, bool) {
    let c = half_space_counts(sub, l);
    (c.roots_negative, c.weights_below_one, c.inequality_holds())
}

fn points_of(sub: &SubProblem, idx: &[usize]) -> Vec<QVec> {
    idx.iter().map(|&i| sub.weights[i].v.clone()).collect()
}

/// Builds the candidate spanned by the weights `subset`, or `None` if one of
/// the defining conditions fails.
pub fn candidate_from_subset(sub: &SubProblem, subset: &[usize]) -> Option<Candidate> {
    let p = sub.space.perp(&points_of(sub, subset)).ok()?;
    if p.is_zero() {
        return None;
    }
    let l = p.scale(&sub.space.norm2(&p).recip());
    let support = saturate(sub, &l);
    let m = points_of(sub, &support);
    // Saturation must not move the foot; otherwise the enlarged set is found
    // from its own spanning subsets.
    if sub.space.perp(&m).ok()? != p || !in_hull(&p, &m) {
        return None;
    }
    let counts = half_space_counts(sub, &l);
    counts.inequality_holds().then_some(Candidate {
        l,
        support,
        perp_point: p,
        counts,
    })
}

/// The candidate with the given `l`, if `l` is one.
pub fn candidate_at(sub: &SubProblem, l: &QVec) -> Option<Candidate> {
    if l.is_zero() {
        return None;
    }
    let support = saturate(sub, l);
    if support.is_empty() {
        return None;
    }
    let c = candidate_from_subset(sub, &support)?;
    (c.l == *l).then_some(c)
}

pub fn enumerate_candidates(sub: &SubProblem, opts: EnumerationOptions) -> Result<Vec<Candidate>> {
    let points = points_of(sub, &(0..sub.weights.len()).collect::<Vec<_>>());
    let subsets: Vec<Vec<usize>> = affinely_independent_subsets(&points, sub.rank()).collect();
    let found: BTreeSet<QVec> = subsets
        .par_iter()
        .filter_map(|s| candidate_from_subset(sub, s).map(|c| c.l))
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    let reps = if opts.weyl_dedup {
        canonical_representatives(sub, found)?
    } else {
        found
    };
    Ok(reps
        .into_iter()
        .map(|l| candidate_at(sub, &l).expect("Weyl images of candidates are candidates"))
        .collect())
}

/// Replaces each vector by the lexicographically greatest member of its Weyl orbit.
pub fn canonical_representatives(sub: &SubProblem, ls: BTreeSet<QVec>) -> Result<BTreeSet<QVec>> {
    let mut reps = BTreeSet::new();
    let mut covered: BTreeSet<QVec> = BTreeSet::new();
    for l in ls {
        if covered.contains(&l) {
            continue;
        }
        let orbit = sub.weyl.orbit(&sub.space, &l)?;
        reps.insert(orbit.last().expect("orbit contains l").clone());
        covered.extend(orbit);
    }
    Ok(reps)
}

/// Re-checks every candidate invariant from scratch; returns the failures.
pub fn verify_candidate(sub: &SubProblem, c: &Candidate) -> Vec<String> {
    let mut problems = Vec::new();
    let one = crate::rational::one();
    for &i in &c.support {
        if sub.space.dot(&c.l, &sub.weights[i].v) != one {
            problems.push(format!("weight {i} is not on the hyperplane of {}", c.l));
        }
    }
    let m = points_of(sub, &c.support);
    match sub.space.perp(&m) {
        Ok(p) if p == c.perp_point && !p.is_zero() => {
            if c.l != p.scale(&sub.space.norm2(&p).recip()) {
                problems.push(format!("l = {} is not perp/|perp|^2", c.l));
            }
            if !in_hull(&p, &m) {
                problems.push(format!("perp point {p} outside the hull of M"));
            }
        }
        _ => problems.push(format!("perp point mismatch for {}", c.l)),
    }
    if saturate(sub, &c.l) != c.support {
        problems.push(format!("support of {} is not saturated", c.l));
    }
    if !c.counts.inequality_holds() || c.counts != half_space_counts(sub, &c.l) {
        problems.push(format!("half-space counts wrong for {}", c.l));
    }
    if !sub.space.dot(&c.l, &c.perp_point).is_one() {
        problems.push(format!("<l, perp> != 1 for {}", c.l));
    }
    problems
}
