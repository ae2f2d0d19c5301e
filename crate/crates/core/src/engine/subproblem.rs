use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{GramSpace, QVec};
use crate::rational::one;
use crate::root_data::{ValidatedProblem, Weight, WeylGroup};

/// The data of `G[l₁]…[l_k]` acting on `V[l₁]…[l_k]`, kept in the ambient
/// coordinates of the original problem. Everything lives in the subspace
/// orthogonal to all constraints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubProblem {
    pub space: Arc<GramSpace>,
    pub constraints: Vec<QVec>,
    pub roots: Vec<QVec>,
    pub weights: Vec<Weight>,
    pub weyl: WeylGroup,
}

impl SubProblem {
    pub fn from_problem(p: &ValidatedProblem) -> Self {
        SubProblem {
            space: Arc::new(p.space.clone()),
            constraints: Vec::new(),
            roots: p.roots.clone(),
            weights: p.weights.clone(),
            weyl: p.weyl.clone(),
        }
    }

    /// Rank of the subgroup's torus.
    pub fn rank(&self) -> usize {
        self.space.rank() - self.constraints.len()
    }

    pub fn dim_v(&self) -> u64 {
        self.weights.iter().map(|w| w.mult).sum()
    }

    /// Roots, weights and Weyl group of `G[l]` on `V[l]`: the roots orthogonal
    /// to `l`, and the weights on `{l = 1}` projected onto `{l = 0}` with
    /// multiplicities of coinciding projections summed.
    pub fn restrict(&self, l: &QVec) -> Result<SubProblem> {
        if l.dim() != self.space.rank() || l.is_zero() {
            return Err(Error::input(format!("cannot restrict along {l}")));
        }
        if let Some(c) = self.constraints.iter().find(|c| !self.space.dot(l, c).is_zero()) {
            return Err(Error::input(format!("{l} is not orthogonal to constraint {c}")));
        }
        let roots: Vec<QVec> = self
            .roots
            .iter()
            .filter(|a| self.space.dot(l, a).is_zero())
            .cloned()
            .collect();
        let one = one();
        let weights = merge_weights(
            self.weights
                .iter()
                .filter(|w| self.space.dot(l, &w.v) == one)
                .map(|w| Weight::new(self.space.project_unchecked(l, &w.v), w.mult)),
        );
        let mut constraints = self.constraints.clone();
        constraints.push(l.clone());
        let weyl = WeylGroup::from_roots(&self.space, &roots, self.weyl.cap);
        Ok(SubProblem {
            space: Arc::clone(&self.space),
            constraints,
            roots,
            weights,
            weyl,
        })
    }
}

/// Sorted distinct weights, summing the multiplicities of equal vectors.
pub fn merge_weights(weights: impl IntoIterator<Item = Weight>) -> Vec<Weight> {
    let mut merged: BTreeMap<QVec, u64> = BTreeMap::new();
    for w in weights {
        *merged.entry(w.v).or_default() += w.mult;
    }
    merged.into_iter().map(|(v, mult)| Weight { v, mult }).collect()
}
