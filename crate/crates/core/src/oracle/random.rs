//! Seeded random instances of rank at most three with few distinct weights,
//! small enough for the all-subsets oracle.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::geometry::{GramSpace, QVec};
use crate::rational::{rat, Rat};
use crate::root_data::adjoint_roots;
use crate::root_data::{Problem, Weight, WeylGenerator, WeylPolicy};

pub const MAX_DISTINCT_WEIGHTS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// No roots, random positive definite form, rank 1–3.
    Torus,
    /// One root pair in rank 2 with an arbitrary positive definite form.
    A1Skew,
    A1xA1,
    A2,
    B2,
    G2,
    /// A2 plus a one-dimensional central torus.
    A2Torus,
    A3,
    A1Cubed,
}

impl Family {
    pub const ALL: [Family; 9] = [
        Family::Torus,
        Family::A1Skew,
        Family::A1xA1,
        Family::A2,
        Family::B2,
        Family::G2,
        Family::A2Torus,
        Family::A3,
        Family::A1Cubed,
    ];

    pub const RANK2: [Family; 5] = [Family::A1Skew, Family::A1xA1, Family::A2, Family::B2, Family::G2];
}

fn int_rows(rows: Vec<Vec<i64>>) -> Vec<Vec<Rat>> {
    rows.into_iter().map(|r| r.into_iter().map(rat).collect()).collect()
}

/// `BᵀB + I` for a random small-integer `B`: always positive definite.
fn random_gram(rng: &mut ChaCha8Rng, r: usize) -> Vec<Vec<Rat>> {
    let b: Vec<Vec<i64>> = (0..r).map(|_| (0..r).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    let g = (0..r)
        .map(|i| (0..r).map(|j| (0..r).map(|k| b[k][i] * b[k][j]).sum::<i64>() + i64::from(i == j)).collect())
        .collect();
    int_rows(g)
}

fn frame(rng: &mut ChaCha8Rng, family: Family) -> (Vec<Vec<Rat>>, Vec<QVec>) {
    let typed = |ty: &str| adjoint_roots(ty).expect("built-in type");
    match family {
        Family::Torus => {
            let r = rng.gen_range(1..=3);
            (random_gram(rng, r), vec![])
        }
        Family::A1Skew => {
            let g = random_gram(rng, 2);
            let mut alpha = QVec::zeros(2);
            while alpha.is_zero() {
                alpha = QVec::from_ints(&[rng.gen_range(-1..=1), rng.gen_range(-1..=1)]);
            }
            (g, vec![-&alpha, alpha])
        }
        Family::A1xA1 => typed("A1xA1"),
        Family::A2 => typed("A2"),
        Family::B2 => typed("B2"),
        Family::G2 => typed("G2"),
        Family::A3 => typed("A3"),
        Family::A1Cubed => typed("A1xA1xA1"),
        Family::A2Torus => {
            let (g2, roots2) = typed("A2");
            let mut g = vec![vec![rat(0); 3]; 3];
            for i in 0..2 {
                for j in 0..2 {
                    g[i][j] = g2[i][j].clone();
                }
            }
            g[2][2] = rat(1);
            let roots = roots2
                .into_iter()
                .map(|r| QVec(vec![r[0].clone(), r[1].clone(), rat(0)]))
                .collect();
            (g, roots)
        }
    }
}

fn orbit_closure(space: &GramSpace, gens: &[WeylGenerator], v: QVec, cap: usize) -> Option<Vec<QVec>> {
    let mut seen = vec![v];
    let mut i = 0;
    while i < seen.len() {
        for g in gens {
            let w = g.apply(space, &seen[i]);
            if !seen.contains(&w) {
                if seen.len() >= cap {
                    return None;
                }
                seen.push(w);
            }
        }
        i += 1;
    }
    Some(seen)
}

/// One instance of the given family. Weights are integer points of the box
/// `[-2, 2]^r`, closed under the Weyl group, each orbit carrying a random
/// multiplicity in `1..=3`.
pub fn random_problem(rng: &mut ChaCha8Rng, family: Family) -> Problem {
    let (gram, roots) = frame(rng, family);
    let rank = gram.len();
    let space = GramSpace::new(gram.clone()).expect("frames are positive definite");
    let gens: Vec<WeylGenerator> = roots
        .iter()
        .filter(|r| **r > -*r)
        .map(|r| WeylGenerator::reflection(&space, r))
        .collect();
    let target_orbits = rng.gen_range(1..=4);
    let mut weights: BTreeMap<QVec, u64> = BTreeMap::new();
    let mut attempts = 0;
    while (weights.is_empty() || attempts < target_orbits) && attempts < 64 {
        attempts += 1;
        let v = QVec::from_ints(&(0..rank).map(|_| rng.gen_range(-2..=2)).collect::<Vec<_>>());
        if weights.contains_key(&v) {
            continue;
        }
        let room = MAX_DISTINCT_WEIGHTS - weights.len();
        if room == 0 {
            break;
        }
        let Some(orbit) = orbit_closure(&space, &gens, v, room) else {
            continue;
        };
        let mult = rng.gen_range(1..=3);
        for w in orbit {
            *weights.entry(w).or_default() += mult;
        }
    }
    if weights.is_empty() {
        // Every draw overflowed; the zero weight is always a fixed point.
        weights.insert(QVec::zeros(rank), 1);
    }
    Problem {
        rank,
        gram,
        roots,
        weights: weights.into_iter().map(|(v, mult)| Weight { v, mult }).collect(),
        weyl: WeylPolicy::from_roots(),
        orbit_cap: None,
    }
}

/// `count` instances drawn round-robin-free from `families`.
pub fn random_problems(seed: u64, count: usize, families: &[Family]) -> Vec<(Family, Problem)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let f = *families.choose(&mut rng).expect("at least one family");
            (f, random_problem(&mut rng, f))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instances_validate_and_stay_small() {
        for (f, p) in random_problems(11, 200, &Family::ALL) {
            let v = p.validate().unwrap_or_else(|e| panic!("{f:?}: {e:?}"));
            assert!(v.weights.len() <= MAX_DISTINCT_WEIGHTS, "{f:?}");
            assert!(v.rank() <= 3);
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        assert_eq!(random_problems(3, 20, &Family::ALL), random_problems(3, 20, &Family::ALL));
    }
}
