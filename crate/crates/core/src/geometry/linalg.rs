//! Exact Gaussian elimination. Pivots are the first nonzero entry in column order.

use num_traits::{Signed, Zero};

use super::QVec;
use crate::error::{Error, Result};
use crate::rational::Rat;

/// Reduces `vectors` to a row-echelon basis of their span.
pub fn echelon_basis(vectors: &[QVec]) -> Vec<QVec> {
    let mut basis: Vec<(usize, QVec)> = Vec::new();
    for v in vectors {
        if let Some(reduced) = reduce_against(&basis, v) {
            insert_row(&mut basis, reduced);
        }
    }
    basis.into_iter().map(|(_, v)| v).collect()
}

pub fn matrix_rank(vectors: &[QVec]) -> usize {
    echelon_basis(vectors).len()
}

/// Incrementally maintained echelon form, used by subset enumeration.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    rows: Vec<(usize, QVec)>,
}

impl Echelon {
    /// Adds `v` if it is independent of the current rows; reports whether it was.
    pub(crate) fn try_push(&mut self, v: &QVec) -> bool {
        match reduce_against(&self.rows, v) {
            Some(r) => {
                insert_row(&mut self.rows, r);
                true
            }
            None => false,
        }
    }
}

fn reduce_against(basis: &[(usize, QVec)], v: &QVec) -> Option<(usize, QVec)> {
    let mut v = v.clone();
    for (pivot, row) in basis {
        if !v[*pivot].is_zero() {
            let c = v[*pivot].clone() / &row[*pivot];
            v = v.add_scaled(&-c, row);
        }
    }
    let pivot = v.iter().position(|x| !x.is_zero())?;
    Some((pivot, v))
}

fn insert_row(basis: &mut Vec<(usize, QVec)>, (pivot, row): (usize, QVec)) {
    // Clear the new pivot column from the existing rows to keep reduction one-pass.
    for (_, other) in basis.iter_mut() {
        if !other[pivot].is_zero() {
            let c = other[pivot].clone() / &row[pivot];
            *other = other.add_scaled(&-c, &row);
        }
    }
    basis.push((pivot, row));
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(QVec),
    Inconsistent,
    Underdetermined,
}

/// Solves the square system `a·x = b` exactly.
pub fn solve_linear_exact(a: &[Vec<Rat>], b: &QVec) -> Result<LinearSolution> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::input("solve_linear_exact requires a square matrix"));
    }
    if b.dim() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: b.dim(),
        });
    }
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b.iter())
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != row && !m[i][col].is_zero() {
                let c = m[i][col].clone();
                for j in col..=n {
                    let delta = &c * &m[row][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[n].is_zero()) {
        return Ok(LinearSolution::Inconsistent);
    }
    if pivots.len() < n {
        return Ok(LinearSolution::Underdetermined);
    }
    Ok(LinearSolution::Unique(QVec(
        m.into_iter().map(|mut r| r.pop().unwrap()).collect(),
    )))
}

fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut m = m.to_vec();
    let mut det = Rat::from_integer(1.into());
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        det *= &m[col][col];
        for i in col + 1..n {
            if !m[i][col].is_zero() {
                let c = m[i][col].clone() / &m[col][col];
                for j in col..n {
                    let delta = &c * &m[col][j];
                    m[i][j] -= delta;
                }
            }
        }
    }
    det
}

/// Size of the first leading principal minor that is not positive, if any.
pub fn first_nonpositive_minor(gram: &[Vec<Rat>]) -> Result<Option<usize>> {
    let n = gram.len();
    if gram.iter().any(|row| row.len() != n) {
        return Err(Error::input("gram matrix must be square"));
    }
    for k in 1..=n {
        let minor: Vec<Vec<Rat>> = gram[..k].iter().map(|row| row[..k].to_vec()).collect();
        if !determinant(&minor).is_positive() {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

/// Exact leading-principal-minor test (Sylvester's criterion).
pub fn is_positive_definite(gram: &[Vec<Rat>]) -> Result<bool> {
    Ok(first_nonpositive_minor(gram)?.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| QVec::from_ints(r).0).collect()
    }

    #[test]
    fn positive_definite_examples() {
        assert!(is_positive_definite(&m(&[&[1, 0], &[0, 1]])).unwrap());
        assert!(!is_positive_definite(&m(&[&[1, 2], &[2, 1]])).unwrap());
        assert_eq!(first_nonpositive_minor(&m(&[&[1, 2], &[2, 1]])).unwrap(), Some(2));
        // minors 2 and 2*6 - 9 = 3
        assert!(is_positive_definite(&m(&[&[2, -3], &[-3, 6]])).unwrap());
        assert!(is_positive_definite(&m(&[&[1, 0]])).is_err());
    }

    #[test]
    fn solve_examples() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve_linear_exact(&a, &QVec::from_ints(&[1, 2])).unwrap();
        assert_eq!(x, LinearSolution::Unique(QVec(vec![ratio(1, 5), ratio(3, 5)])));
        let sing = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(
            solve_linear_exact(&sing, &QVec::from_ints(&[1, 3])).unwrap(),
            LinearSolution::Inconsistent
        );
        assert_eq!(
            solve_linear_exact(&sing, &QVec::from_ints(&[1, 2])).unwrap(),
            LinearSolution::Underdetermined
        );
        assert!(solve_linear_exact(&m(&[&[1, 2]]), &QVec::from_ints(&[1])).is_err());
    }

    #[test]
    fn echelon_rank() {
        let vs = [
            QVec::from_ints(&[1, 2, 3]),
            QVec::from_ints(&[2, 4, 6]),
            QVec::from_ints(&[0, 1, 1]),
        ];
        assert_eq!(matrix_rank(&vs), 2);
        assert_eq!(determinant(&m(&[&[0, 1], &[1, 0]])), rat(-1));
    }
}
