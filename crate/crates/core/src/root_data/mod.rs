//! Problem instances: a Gram space, a root system, and a weight system with
//! multiplicities, together with the Weyl group action used to identify
//! equivalent data.

mod catalog;

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{first_nonpositive_minor, GramSpace, QVec};
use crate::rational::{self, Rat};

pub use catalog::{adjoint_roots, catalog, catalog_names, parse_catalog_spec, positive_roots, simple_root_gram, sl2_forms, sl3_forms};

pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// A weight with its multiplicity `dim V_μ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    pub v: QVec,
    pub mult: u64,
}

impl Weight {
    pub fn new(v: QVec, mult: u64) -> Self {
        Weight { v, mult }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WeylPolicy {
    Generators {
        #[serde(with = "rational::matrix_list")]
        generators: Vec<Vec<Vec<Rat>>>,
    },
    FromRoots {
        mode: FromRootsTag,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FromRootsTag {
    #[serde(rename = "from_roots")]
    FromRoots,
}

impl WeylPolicy {
    pub fn from_roots() -> Self {
        WeylPolicy::FromRoots {
            mode: FromRootsTag::FromRoots,
        }
    }
}

impl Default for WeylPolicy {
    fn default() -> Self {
        Self::from_roots()
    }
}

/// An unvalidated problem, exactly as read from a file or built by the catalog.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Problem {
    pub rank: usize,
    #[serde(with = "rational::matrix")]
    pub gram: Vec<Vec<Rat>>,
    pub roots: Vec<QVec>,
    pub weights: Vec<Weight>,
    #[serde(default)]
    pub weyl: WeylPolicy,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_cap: Option<usize>,
}

impl Problem {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::input(format!("malformed problem JSON: {e}")))
    }

    pub fn validate(&self) -> Result<ValidatedProblem, Vec<Violation>> {
        validate(self)
    }

    /// Same data with the Gram form multiplied by `c`.
    pub fn with_scaled_gram(&self, c: &Rat) -> Problem {
        let mut p = self.clone();
        for row in p.gram.iter_mut() {
            for x in row.iter_mut() {
                *x *= c;
            }
        }
        p
    }

    /// Same data with `f` applied to every root and weight.
    pub fn transported(&self, f: impl Fn(&QVec) -> QVec) -> Problem {
        let mut p = self.clone();
        p.roots = self.roots.iter().map(&f).collect();
        p.weights = self.weights.iter().map(|w| Weight::new(f(&w.v), w.mult)).collect();
        p
    }
}

/// One reason a problem was rejected; the message names the offending datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    Shape(String),
    GramNotSymmetric { i: usize, j: usize },
    GramNotPositiveDefinite { minor: usize },
    ZeroRoot,
    DuplicateRoot(QVec),
    RootNegationMissing(QVec),
    NonReduced { root: QVec, multiple: QVec },
    ZeroMultiplicity(QVec),
    DuplicateWeight(QVec),
    EmptyWeightSystem,
    GeneratorNotOrthogonal { generator: usize },
    GeneratorMovesRoot { generator: usize, root: QVec },
    WeightsNotInvariant { generator: usize, weight: QVec },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            Shape(msg) => f.write_str(msg),
            GramNotSymmetric { i, j } => write!(f, "gram not symmetric at ({i}, {j})"),
            GramNotPositiveDefinite { minor } => write!(f, "gram not positive definite at minor {minor}"),
            ZeroRoot => f.write_str("root system contains the zero vector"),
            DuplicateRoot(r) => write!(f, "root {r} listed twice"),
            RootNegationMissing(r) => write!(f, "root {r} present but its negative is missing"),
            NonReduced { root, multiple } => {
                write!(f, "root system not reduced: {multiple} is a multiple of {root}")
            }
            ZeroMultiplicity(w) => write!(f, "weight {w} has multiplicity 0"),
            DuplicateWeight(w) => write!(f, "weight {w} listed twice"),
            EmptyWeightSystem => f.write_str("weight system is empty"),
            GeneratorNotOrthogonal { generator } => {
                write!(f, "Weyl generator {generator} does not preserve the gram form")
            }
            GeneratorMovesRoot { generator, root } => {
                write!(f, "Weyl generator {generator} maps root {root} outside the root system")
            }
            WeightsNotInvariant { generator, weight } => write!(
                f,
                "weight multiset not invariant under Weyl generator {generator} (at weight {weight})"
            ),
        }
    }
}

/// A generator of the Weyl group acting on coordinate vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylGenerator {
    Reflection { root: QVec, norm2: Rat },
    Matrix(Vec<Vec<Rat>>),
}

impl WeylGenerator {
    pub fn reflection(space: &GramSpace, root: &QVec) -> Self {
        WeylGenerator::Reflection {
            root: root.clone(),
            norm2: space.norm2(root),
        }
    }

    pub fn apply(&self, space: &GramSpace, v: &QVec) -> QVec {
        match self {
            WeylGenerator::Reflection { root, norm2 } => space.reflect_unchecked(root, norm2, v),
            WeylGenerator::Matrix(a) => QVec(
                a.iter()
                    .map(|row| row.iter().zip(v.iter()).map(|(x, y)| x * y).sum())
                    .collect(),
            ),
        }
    }
}

/// Generators of a Weyl group. The group itself is never listed; only orbits
/// of individual vectors are closed, up to `cap` elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylGroup {
    pub generators: Vec<WeylGenerator>,
    pub cap: usize,
}

impl WeylGroup {
    /// One reflection per pair `±α`.
    pub fn from_roots(space: &GramSpace, roots: &[QVec], cap: usize) -> Self {
        let generators = roots
            .iter()
            .filter(|r| **r > -*r)
            .map(|r| WeylGenerator::reflection(space, r))
            .collect();
        WeylGroup { generators, cap }
    }

    pub fn orbit(&self, space: &GramSpace, v: &QVec) -> Result<BTreeSet<QVec>> {
        let mut seen = BTreeSet::from([v.clone()]);
        let mut queue = VecDeque::from([v.clone()]);
        while let Some(u) = queue.pop_front() {
            for g in &self.generators {
                let w = g.apply(space, &u);
                if !seen.contains(&w) {
                    if seen.len() >= self.cap {
                        return Err(Error::OrbitCapExceeded { cap: self.cap });
                    }
                    seen.insert(w.clone());
                    queue.push_back(w);
                }
            }
        }
        Ok(seen)
    }

    /// Lexicographically greatest member of the orbit of `v`.
    pub fn canonical(&self, space: &GramSpace, v: &QVec) -> Result<QVec> {
        if self.generators.is_empty() {
            return Ok(v.clone());
        }
        Ok(self.orbit(space, v)?.into_iter().next_back().expect("orbit contains v"))
    }
}

/// A problem that passed every check. Roots and weights are stored in
/// lexicographic order; all reported indices refer to these orderings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidatedProblem {
    pub space: GramSpace,
    pub roots: Vec<QVec>,
    pub weights: Vec<Weight>,
    pub weyl: WeylGroup,
    pub policy: WeylPolicy,
}

impl ValidatedProblem {
    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    pub fn dim_v(&self) -> u64 {
        self.weights.iter().map(|w| w.mult).sum()
    }

    pub fn weyl_orbit(&self, v: &QVec) -> Result<BTreeSet<QVec>> {
        self.weyl.orbit(&self.space, v)
    }

    pub fn with_orbit_cap(mut self, cap: usize) -> Self {
        self.weyl.cap = cap;
        self
    }

    /// The unvalidated form of this problem (canonical orderings kept).
    pub fn to_problem(&self) -> Problem {
        Problem {
            rank: self.rank(),
            gram: self.space.gram().to_vec(),
            roots: self.roots.clone(),
            weights: self.weights.clone(),
            weyl: self.policy.clone(),
            orbit_cap: Some(self.weyl.cap),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(|w| w.v.is_zero())
    }
}

pub fn reflect(space: &GramSpace, alpha: &QVec, v: &QVec) -> Result<QVec> {
    space.reflect(alpha, v)
}

pub fn weyl_orbit(problem: &ValidatedProblem, v: &QVec) -> Result<BTreeSet<QVec>> {
    problem.weyl_orbit(v)
}

/// Checks every hypothesis on the input and reports all violations at once.
pub fn validate(problem: &Problem) -> Result<ValidatedProblem, Vec<Violation>> {
    let mut out = Vec::new();
    let r = problem.rank;
    if r == 0 {
        out.push(Violation::Shape("rank must be at least 1".into()));
        return Err(out);
    }
    if problem.gram.len() != r || problem.gram.iter().any(|row| row.len() != r) {
        out.push(Violation::Shape(format!("gram must be a {r}x{r} matrix")));
        return Err(out);
    }
    for (what, v) in problem
        .roots
        .iter()
        .map(|v| ("root", v))
        .chain(problem.weights.iter().map(|w| ("weight", &w.v)))
    {
        if v.dim() != r {
            out.push(Violation::Shape(format!("{what} {v} has length {} but rank is {r}", v.dim())));
        }
    }
    if let WeylPolicy::Generators { generators } = &problem.weyl {
        for (k, g) in generators.iter().enumerate() {
            if g.len() != r || g.iter().any(|row| row.len() != r) {
                out.push(Violation::Shape(format!("Weyl generator {k} must be a {r}x{r} matrix")));
            }
        }
    }
    if !out.is_empty() {
        return Err(out);
    }

    let gram = &problem.gram;
    let mut symmetric = true;
    for i in 0..r {
        for j in 0..i {
            if gram[i][j] != gram[j][i] {
                out.push(Violation::GramNotSymmetric { i, j });
                symmetric = false;
            }
        }
    }
    let minor = first_nonpositive_minor(gram).expect("shape checked");
    if let Some(minor) = minor {
        out.push(Violation::GramNotPositiveDefinite { minor });
    }

    let mut roots = BTreeSet::new();
    for root in &problem.roots {
        if root.is_zero() {
            out.push(Violation::ZeroRoot);
        } else if !roots.insert(root.clone()) {
            out.push(Violation::DuplicateRoot(root.clone()));
        }
    }
    for root in &roots {
        if !roots.contains(&-root) {
            out.push(Violation::RootNegationMissing(root.clone()));
        }
        for other in &roots {
            if other != root && *other != -root && proportional(root, other) {
                if root < other {
                    out.push(Violation::NonReduced {
                        root: root.clone(),
                        multiple: other.clone(),
                    });
                }
            }
        }
    }

    let mut weights: BTreeMap<QVec, u64> = BTreeMap::new();
    for w in &problem.weights {
        if w.mult == 0 {
            out.push(Violation::ZeroMultiplicity(w.v.clone()));
        }
        if weights.insert(w.v.clone(), w.mult).is_some() {
            out.push(Violation::DuplicateWeight(w.v.clone()));
        }
    }
    if weights.is_empty() {
        out.push(Violation::EmptyWeightSystem);
    }

    if !symmetric || minor.is_some() {
        return Err(out);
    }
    let space = GramSpace::new(gram.clone()).expect("gram checked");
    let roots: Vec<QVec> = roots.into_iter().collect();
    let cap = problem.orbit_cap.unwrap_or(DEFAULT_ORBIT_CAP);
    let weyl = match &problem.weyl {
        WeylPolicy::FromRoots { .. } => WeylGroup::from_roots(&space, &roots, cap),
        WeylPolicy::Generators { generators } => WeylGroup {
            generators: generators.iter().cloned().map(WeylGenerator::Matrix).collect(),
            cap,
        },
    };
    let root_set: BTreeSet<&QVec> = roots.iter().collect();
    for (k, g) in weyl.generators.iter().enumerate() {
        if let WeylGenerator::Matrix(a) = g {
            if !preserves_form(&space, a) {
                out.push(Violation::GeneratorNotOrthogonal { generator: k });
            }
        }
        if let Some(root) = roots.iter().find(|root| !root_set.contains(&g.apply(&space, root))) {
            out.push(Violation::GeneratorMovesRoot {
                generator: k,
                root: root.clone(),
            });
        }
        if let Some((v, _)) = weights
            .iter()
            .find(|(v, m)| weights.get(&g.apply(&space, v)) != Some(m))
        {
            out.push(Violation::WeightsNotInvariant {
                generator: k,
                weight: v.clone(),
            });
        }
    }

    if !out.is_empty() {
        return Err(out);
    }
    Ok(ValidatedProblem {
        space,
        roots,
        weights: weights.into_iter().map(|(v, mult)| Weight { v, mult }).collect(),
        weyl,
        policy: problem.weyl.clone(),
    })
}

fn proportional(a: &QVec, b: &QVec) -> bool {
    let Some(i) = a.iter().position(|x| !x.is_zero()) else {
        return false;
    };
    let c = &b[i] / &a[i];
    a.scale(&c) == *b
}

fn preserves_form(space: &GramSpace, a: &[Vec<Rat>]) -> bool {
    let r = space.rank();
    let g = WeylGenerator::Matrix(a.to_vec());
    let images: Vec<QVec> = (0..r).map(|i| g.apply(space, &QVec::unit(r, i))).collect();
    (0..r).all(|i| (0..r).all(|j| space.dot(&images[i], &images[j]) == space.gram()[i][j]))
}
