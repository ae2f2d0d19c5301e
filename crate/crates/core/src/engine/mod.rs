//! The recursive decision procedure. For each candidate `l` a tree of nested
//! restrictions is grown: the children of a node are the candidates of the
//! restricted problem for which the half-space inequality is an equality.
//! Signs are assigned bottom-up and `l` labels a stratum iff its root is plus.

mod subproblem;
mod tree;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::candidates::{enumerate_candidates, half_space_counts, Candidate, EnumerationOptions};
use crate::error::Result;
use crate::geometry::{GramSpace, QVec};
use crate::rational::one;
use crate::root_data::{ValidatedProblem, Weight};

pub use subproblem::{merge_weights, SubProblem};
pub use tree::{Sign, SignedTree};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EngineOptions {
    /// Decide candidates orthogonal to no root without growing their tree.
    pub fast: bool,
    /// Report every candidate instead of one per Weyl orbit (top level only).
    pub no_dedup: bool,
}

type MemoKey = (GramSpace, usize, Vec<QVec>, Vec<Weight>);

/// Runs the procedure, caching the equality sets of restricted problems.
#[derive(Default)]
pub struct Engine {
    opts: EngineOptions,
    memo: Mutex<HashMap<MemoKey, Arc<Vec<QVec>>>>,
}

impl Engine {
    pub fn new(opts: EngineOptions) -> Self {
        Engine {
            opts,
            memo: Mutex::default(),
        }
    }

    pub fn options(&self) -> EngineOptions {
        self.opts
    }

    /// Candidates of `sub` with equality in the half-space inequality, one per Weyl orbit.
    pub fn compute_m_set(&self, sub: &SubProblem) -> Result<Arc<Vec<QVec>>> {
        let key = (
            (*sub.space).clone(),
            sub.constraints.len(),
            sub.roots.clone(),
            sub.weights.clone(),
        );
        if let Some(hit) = self.memo.lock().expect("memo lock").get(&key) {
            return Ok(Arc::clone(hit));
        }
        let m: Vec<QVec> = enumerate_candidates(sub, EnumerationOptions { weyl_dedup: true })?
            .into_iter()
            .filter(|c| c.counts.is_equality())
            .map(|c| c.l)
            .collect();
        let m = Arc::new(m);
        // Equal keys always produce equal sets, so a racing insert is harmless.
        self.memo
            .lock()
            .expect("memo lock")
            .entry(key)
            .or_insert_with(|| Arc::clone(&m));
        Ok(m)
    }

    pub fn build_tree(&self, sub: &SubProblem, l: &QVec) -> Result<SignedTree> {
        if self.opts.fast && !sub.roots.iter().any(|a| sub.space.dot(l, a).is_zero()) {
            // No root orthogonal to l: the restricted problem is a torus whose
            // weights surround the origin, so its equality set is empty.
            return Ok(SignedTree::leaf(l.clone()));
        }
        let restricted = sub.restrict(l)?;
        let m = self.compute_m_set(&restricted)?;
        let children = m
            .iter()
            .map(|a| self.build_tree(&restricted, a))
            .collect::<Result<Vec<_>>>()?;
        Ok(SignedTree::new(l.clone(), children))
    }

    pub fn is_stratifying(&self, sub: &SubProblem, l: &QVec) -> Result<(bool, SignedTree)> {
        let tree = self.build_tree(sub, l)?;
        Ok((tree.is_plus(), tree))
    }

    pub fn stratify(&self, problem: &ValidatedProblem) -> Result<NullconeSummary> {
        let sub = SubProblem::from_problem(problem);
        let opts = EnumerationOptions {
            weyl_dedup: !self.opts.no_dedup,
        };
        let candidates = enumerate_candidates(&sub, opts)?;
        let outcomes = candidates
            .into_par_iter()
            .map(|candidate| {
                let tree = self.build_tree(&sub, &candidate.l)?;
                Ok(CandidateOutcome {
                    stratifying: tree.is_plus(),
                    candidate,
                    tree,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NullconeSummary::assemble(problem, outcomes))
    }
}

pub fn stratify(problem: &ValidatedProblem) -> Result<NullconeSummary> {
    Engine::default().stratify(problem)
}

pub fn build_tree(sub: &SubProblem, l: &QVec) -> Result<SignedTree> {
    Engine::default().build_tree(sub, l)
}

pub fn compute_m_set(sub: &SubProblem) -> Result<Vec<QVec>> {
    Ok(Engine::default().compute_m_set(sub)?.as_ref().clone())
}

pub fn is_stratifying(sub: &SubProblem, l: &QVec) -> Result<bool> {
    Ok(Engine::default().is_stratifying(sub, l)?.0)
}

/// `#{α : <l,α> < 0} + Σ_{<l,μ> ≥ 1} dim V_μ`
pub fn stratum_dimension(problem: &ValidatedProblem, l: &QVec) -> u64 {
    half_space_counts(&SubProblem::from_problem(problem), l).stratum_dimension()
}

/// Whether the stratum of `l` is open in `V`.
pub fn openness_check(problem: &ValidatedProblem, l: &QVec) -> bool {
    half_space_counts(&SubProblem::from_problem(problem), l).is_equality()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepTerm {
    pub weight_index: usize,
    pub symbol: String,
}

/// `Σ c_j v_j` over a weight basis of `V[l]`, one symbol per basis vector.
/// Holds for constants algebraically independent over ℚ, given a weight basis
/// on which root vectors act with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericRepresentative {
    pub terms: Vec<RepTerm>,
}

impl GenericRepresentative {
    pub const CAVEAT: &'static str =
        "coefficients c_k must be algebraically independent over Q; assumes a weight basis with rational structure constants";
}

impl fmt::Display for GenericRepresentative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*v[{}]", t.symbol, t.weight_index)?;
        }
        Ok(())
    }
}

pub fn generic_representative(problem: &ValidatedProblem, l: &QVec) -> GenericRepresentative {
    let one = one();
    let mut terms = Vec::new();
    for (i, w) in problem.weights.iter().enumerate() {
        if problem.space.dot(l, &w.v) == one {
            for _ in 0..w.mult {
                terms.push(RepTerm {
                    weight_index: i,
                    symbol: format!("c_{}", terms.len() + 1),
                });
            }
        }
    }
    GenericRepresentative { terms }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateOutcome {
    pub candidate: Candidate,
    pub stratifying: bool,
    pub tree: SignedTree,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StratumReport {
    pub l: QVec,
    pub dimension: u64,
    /// Weights with `<l,μ> = 1`.
    pub support_v_l: Vec<usize>,
    /// Weights with `<l,μ> ≥ 1`; their span is the fibre whose `G`-sweep is the closure.
    pub support_v_l_plus: Vec<usize>,
    /// Roots with `<l,α> ≥ 0`.
    pub parabolic_roots: Vec<usize>,
    /// Roots with `<l,α> = 0`.
    pub levi_roots: Vec<usize>,
    pub is_open_in_v: bool,
    pub tree: SignedTree,
    pub generic_rep: GenericRepresentative,
}

impl StratumReport {
    pub fn new(problem: &ValidatedProblem, outcome: &CandidateOutcome) -> Self {
        let l = &outcome.candidate.l;
        let one = one();
        let space = &problem.space;
        let weights_where = |keep: &dyn Fn(&crate::rational::Rat) -> bool| -> Vec<usize> {
            problem
                .weights
                .iter()
                .enumerate()
                .filter(|(_, w)| keep(&space.dot(l, &w.v)))
                .map(|(i, _)| i)
                .collect()
        };
        let roots_where = |keep: &dyn Fn(&crate::rational::Rat) -> bool| -> Vec<usize> {
            problem
                .roots
                .iter()
                .enumerate()
                .filter(|(_, a)| keep(&space.dot(l, a)))
                .map(|(i, _)| i)
                .collect()
        };
        StratumReport {
            l: l.clone(),
            dimension: outcome.candidate.counts.stratum_dimension(),
            support_v_l: weights_where(&|x| *x == one),
            support_v_l_plus: weights_where(&|x| *x >= one),
            parabolic_roots: roots_where(&|x| !x.is_negative()),
            levi_roots: roots_where(&|x| x.is_zero()),
            is_open_in_v: outcome.candidate.counts.is_equality(),
            tree: outcome.tree.clone(),
            generic_rep: generic_representative(problem, l),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NullconeSummary {
    pub rank: usize,
    pub dim_v: u64,
    pub candidates: Vec<CandidateOutcome>,
    /// Sorted by decreasing dimension, then by `l`.
    pub strata: Vec<StratumReport>,
    pub dim_nullcone: u64,
    pub equals_v: bool,
    /// Indices into `strata` of the irreducible components of maximal dimension.
    pub max_component_indices: Vec<usize>,
}

impl NullconeSummary {
    fn assemble(problem: &ValidatedProblem, candidates: Vec<CandidateOutcome>) -> Self {
        let mut strata: Vec<StratumReport> = candidates
            .iter()
            .filter(|c| c.stratifying)
            .map(|c| StratumReport::new(problem, c))
            .collect();
        strata.sort_by(|a, b| b.dimension.cmp(&a.dimension).then_with(|| a.l.cmp(&b.l)));
        let dim_nullcone = strata.first().map_or(0, |s| s.dimension);
        let max_component_indices = strata
            .iter()
            .enumerate()
            .take_while(|(_, s)| s.dimension == dim_nullcone)
            .map(|(i, _)| i)
            .collect();
        NullconeSummary {
            rank: problem.rank(),
            dim_v: problem.dim_v(),
            equals_v: strata.iter().any(|s| s.is_open_in_v),
            candidates,
            strata,
            dim_nullcone,
            max_component_indices,
        }
    }

    pub fn stratum_dimensions(&self) -> Vec<u64> {
        let mut dims: Vec<u64> = self.strata.iter().map(|s| s.dimension).collect();
        dims.sort_unstable();
        dims
    }
}
