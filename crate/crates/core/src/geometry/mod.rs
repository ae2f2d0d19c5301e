//! Exact rational linear and convex geometry under a positive-definite Gram form.

mod hull;
mod linalg;
mod subsets;

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::rational::{self, format_rat, Rat};

pub use hull::in_hull;
pub use linalg::{
    echelon_basis, first_nonpositive_minor, is_positive_definite, matrix_rank, solve_linear_exact,
    LinearSolution,
};
pub use subsets::{affinely_independent_subsets, AffinelyIndependentSubsets};

/// A vector of rationals. Ordered lexicographically by coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct QVec(pub Vec<Rat>);

impl QVec {
    pub fn zeros(dim: usize) -> Self {
        QVec(vec![Rat::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        QVec(coords.iter().map(|&c| rational::rat(c)).collect())
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.0[i] = rational::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rat) -> QVec {
        QVec(self.0.iter().map(|x| x * c).collect())
    }

    /// `self + c * other`
    pub fn add_scaled(&self, c: &Rat, other: &QVec) -> QVec {
        QVec(self.0.iter().zip(&other.0).map(|(a, b)| a + c * b).collect())
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rat> {
        self.0.iter()
    }
}

impl Index<usize> for QVec {
    type Output = Rat;
    fn index(&self, i: usize) -> &Rat {
        &self.0[i]
    }
}

impl Add for &QVec {
    type Output = QVec;
    fn add(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &QVec {
    type Output = QVec;
    fn sub(self, rhs: &QVec) -> QVec {
        QVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &QVec {
    type Output = QVec;
    fn neg(self) -> QVec {
        QVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for QVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rat(x))?;
        }
        f.write_str(")")
    }
}

impl Serialize for QVec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for x in &self.0 {
            seq.serialize_element(&format_rat(x))?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QVec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct Elem(Rat);
        impl<'de> Deserialize<'de> for Elem {
            fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
                rational::deserialize(d).map(Elem)
            }
        }
        struct Coords;
        impl<'de> Visitor<'de> for Coords {
            type Value = QVec;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of rationals")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<QVec, A::Error> {
                let mut v = Vec::new();
                while let Some(Elem(x)) = seq.next_element()? {
                    v.push(x);
                }
                Ok(QVec(v))
            }
        }
        d.deserialize_seq(Coords)
    }
}

/// A rational vector space of rank `r` carrying a positive-definite Gram form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GramSpace {
    gram: Vec<Vec<Rat>>,
}

impl GramSpace {
    pub fn new(gram: Vec<Vec<Rat>>) -> Result<Self> {
        let r = gram.len();
        if r == 0 {
            return Err(Error::input("gram matrix must have rank at least 1"));
        }
        if let Some(row) = gram.iter().find(|row| row.len() != r) {
            return Err(Error::DimensionMismatch {
                expected: r,
                found: row.len(),
            });
        }
        for i in 0..r {
            for j in 0..i {
                if gram[i][j] != gram[j][i] {
                    return Err(Error::input(format!("gram not symmetric at ({i}, {j})")));
                }
            }
        }
        if let Some(k) = first_nonpositive_minor(&gram)? {
            return Err(Error::input(format!("gram not positive definite at minor {k}")));
        }
        Ok(GramSpace { gram })
    }

    pub fn identity(rank: usize) -> Self {
        let gram = (0..rank).map(|i| QVec::unit(rank, i).0).collect();
        GramSpace { gram }
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<Rat>] {
        &self.gram
    }

    /// The same space with the form multiplied by `c > 0`.
    pub fn scaled(&self, c: &Rat) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::input("gram scale factor must be positive"));
        }
        let gram = self
            .gram
            .iter()
            .map(|row| row.iter().map(|x| x * c).collect())
            .collect();
        Ok(GramSpace { gram })
    }

    fn check(&self, v: &QVec) -> Result<()> {
        if v.dim() != self.rank() {
            return Err(Error::DimensionMismatch {
                expected: self.rank(),
                found: v.dim(),
            });
        }
        Ok(())
    }

    /// `uᵀ·gram·v`, with dimensions checked.
    pub fn inner(&self, u: &QVec, v: &QVec) -> Result<Rat> {
        self.check(u)?;
        self.check(v)?;
        Ok(self.dot(u, v))
    }

    /// Unchecked form of [`GramSpace::inner`] for vectors already known to fit.
    pub fn dot(&self, u: &QVec, v: &QVec) -> Rat {
        debug_assert_eq!(u.dim(), self.rank());
        debug_assert_eq!(v.dim(), self.rank());
        let mut acc = Rat::zero();
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            let mut row = Rat::zero();
            for (g, vj) in self.gram[i].iter().zip(v.iter()) {
                if !vj.is_zero() {
                    row += g * vj;
                }
            }
            acc += ui * row;
        }
        acc
    }

    pub fn norm2(&self, v: &QVec) -> Rat {
        self.dot(v, v)
    }

    /// Foot of the perpendicular dropped from the origin onto `aff(points)`.
    pub fn perp(&self, points: &[QVec]) -> Result<QVec> {
        let (base, rest) = points
            .split_first()
            .ok_or_else(|| Error::input("perp of an empty point set"))?;
        self.check(base)?;
        for p in rest {
            self.check(p)?;
        }
        let diffs: Vec<QVec> = rest.iter().map(|p| p - base).collect();
        let dirs = echelon_basis(&diffs);
        if dirs.is_empty() {
            return Ok(base.clone());
        }
        // Normal equations (D·G·Dᵀ) c = -D·G·base.
        let k = dirs.len();
        let mut a = vec![vec![Rat::zero(); k]; k];
        let mut b = vec![Rat::zero(); k];
        for i in 0..k {
            for j in i..k {
                let g = self.dot(&dirs[i], &dirs[j]);
                a[j][i] = g.clone();
                a[i][j] = g;
            }
            b[i] = -self.dot(&dirs[i], base);
        }
        let coeffs = match solve_linear_exact(&a, &QVec(b))? {
            LinearSolution::Unique(c) => c,
            _ => unreachable!("normal equations of independent directions are nonsingular"),
        };
        let mut p = base.clone();
        for (c, d) in coeffs.iter().zip(&dirs) {
            p = p.add_scaled(c, d);
        }
        Ok(p)
    }

    /// Whether `p` is a convex combination of `points`.
    pub fn in_convex_hull(&self, p: &QVec, points: &[QVec]) -> Result<bool> {
        if points.is_empty() {
            return Err(Error::input("convex hull of an empty point set"));
        }
        self.check(p)?;
        for q in points {
            self.check(q)?;
        }
        Ok(in_hull(p, points))
    }

    /// Orthogonal projection of `v` onto the hyperplane `{x : <l, x> = 0}`.
    pub fn project_hyperplane(&self, l: &QVec, v: &QVec) -> Result<QVec> {
        self.check(l)?;
        self.check(v)?;
        if l.is_zero() {
            return Err(Error::input("projection along the zero vector"));
        }
        Ok(self.project_unchecked(l, v))
    }

    pub(crate) fn project_unchecked(&self, l: &QVec, v: &QVec) -> QVec {
        let c = self.dot(l, v) / self.norm2(l);
        v.add_scaled(&-c, l)
    }

    /// `v` reflected in the hyperplane orthogonal to `alpha`.
    pub fn reflect(&self, alpha: &QVec, v: &QVec) -> Result<QVec> {
        self.check(alpha)?;
        self.check(v)?;
        if alpha.is_zero() {
            return Err(Error::input("reflection in the zero vector"));
        }
        Ok(self.reflect_unchecked(alpha, &self.norm2(alpha), v))
    }

    pub(crate) fn reflect_unchecked(&self, alpha: &QVec, alpha_norm2: &Rat, v: &QVec) -> QVec {
        let c = rational::rat(2) * self.dot(v, alpha) / alpha_norm2;
        v.add_scaled(&-c, alpha)
    }
}
