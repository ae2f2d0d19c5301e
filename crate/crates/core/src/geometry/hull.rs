//! Convex-hull membership as a phase-1 simplex over the rationals.

use num_traits::{One, Signed, Zero};

use super::QVec;
use crate::rational::Rat;

/// True iff `p = Σ λᵢ·points[i]` for some `λ ≥ 0` with `Σ λᵢ = 1`.
///
/// Dimensions are assumed consistent. Entering and leaving variables follow
/// Bland's rule, so the method terminates on degenerate instances.
pub fn in_hull(p: &QVec, points: &[QVec]) -> bool {
    let n = points.len();
    let dim = p.dim();
    let m = dim + 1;
    // Columns: n hull weights, then m artificials, then the right-hand side.
    let width = n + m + 1;
    let mut rows: Vec<Vec<Rat>> = Vec::with_capacity(m);
    for r in 0..m {
        let mut row = vec![Rat::zero(); width];
        for (j, q) in points.iter().enumerate() {
            row[j] = if r < dim { q[r].clone() } else { Rat::one() };
        }
        row[n + m] = if r < dim { p[r].clone() } else { Rat::one() };
        if row[n + m].is_negative() {
            for x in row.iter_mut() {
                *x = -&*x;
            }
        }
        row[n + r] = Rat::one();
        rows.push(row);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-1 objective (sum of artificials).
    let mut cost = vec![Rat::zero(); width];
    for j in n..n + m {
        cost[j] = Rat::one();
    }
    for row in &rows {
        for (c, x) in cost.iter_mut().zip(row) {
            *c -= x;
        }
    }

    loop {
        let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) else {
            break;
        };
        let mut leave: Option<(usize, Rat)> = None;
        for (i, row) in rows.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[n + m] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        // The phase-1 objective is bounded below by zero, so a leaving row exists.
        let (pivot_row, _) = leave.expect("phase-1 objective is bounded");
        pivot(&mut rows, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }
    cost[n + m].is_zero()
}

fn pivot(rows: &mut [Vec<Rat>], cost: &mut [Rat], r: usize, c: usize) {
    let inv = rows[r][c].recip();
    for x in rows[r].iter_mut() {
        *x *= &inv;
    }
    let pivot_row = rows[r].clone();
    for (i, row) in rows.iter_mut().enumerate() {
        if i != r && !row[c].is_zero() {
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (x, y) in cost.iter_mut().zip(&pivot_row) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
    }
}
