use super::linalg::Echelon;
use super::QVec;

/// Index subsets of `points` with `1..=max_size` affinely independent members,
/// in lexicographic order of their sorted index sequences.
pub fn affinely_independent_subsets(points: &[QVec], max_size: usize) -> AffinelyIndependentSubsets<'_> {
    AffinelyIndependentSubsets {
        points,
        max_size,
        stack: Vec::new(),
        echelons: Vec::new(),
        done: max_size == 0,
    }
}

/// Depth-first walk that prunes every superset of a dependent set.
pub struct AffinelyIndependentSubsets<'a> {
    points: &'a [QVec],
    max_size: usize,
    stack: Vec<usize>,
    // echelons[k] spans the differences of stack[1..=k] from stack[0]
    echelons: Vec<Echelon>,
    done: bool,
}

impl AffinelyIndependentSubsets<'_> {
    /// Smallest index `>= start` that keeps the current prefix independent.
    fn extend_from(&self, start: usize) -> Option<(usize, Echelon)> {
        let Some(&base) = self.stack.first() else {
            return (start < self.points.len()).then(Echelon::default).map(|e| (start, e));
        };
        let prefix = self.echelons.last().expect("echelon per stack entry");
        (start..self.points.len()).find_map(|j| {
            let mut e = prefix.clone();
            e.try_push(&(&self.points[j] - &self.points[base])).then_some((j, e))
        })
    }
}

impl Iterator for AffinelyIndependentSubsets<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.stack.len() < self.max_size {
            let start = self.stack.last().map_or(0, |&k| k + 1);
            if let Some((j, e)) = self.extend_from(start) {
                self.stack.push(j);
                self.echelons.push(e);
                return Some(self.stack.clone());
            }
        }
        while let Some(k) = self.stack.pop() {
            self.echelons.pop();
            if let Some((j, e)) = self.extend_from(k + 1) {
                self.stack.push(j);
                self.echelons.push(e);
                return Some(self.stack.clone());
            }
        }
        self.done = true;
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::matrix_rank;
    use proptest::prelude::*;

    fn pts(v: &[&[i64]]) -> Vec<QVec> {
        v.iter().map(|p| QVec::from_ints(p)).collect()
    }

    #[test]
    fn collinear_points() {
        let p = pts(&[&[0, 0], &[1, 1], &[2, 2]]);
        let subsets: Vec<_> = affinely_independent_subsets(&p, 3).collect();
        assert_eq!(subsets.iter().filter(|s| s.len() == 1).count(), 3);
        assert_eq!(subsets.iter().filter(|s| s.len() == 2).count(), 3);
        assert_eq!(subsets.iter().filter(|s| s.len() == 3).count(), 0);
    }

    #[test]
    fn triangle() {
        let p = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        let subsets: Vec<_> = affinely_independent_subsets(&p, 3).collect();
        assert_eq!(
            subsets,
            vec![vec![0], vec![0, 1], vec![0, 1, 2], vec![0, 2], vec![1], vec![1, 2], vec![2]]
        );
        assert_eq!(affinely_independent_subsets(&p, 0).count(), 0);
    }

    fn naive_count(points: &[QVec], max: usize) -> usize {
        let n = points.len();
        (1u32..1 << n)
            .filter(|mask| {
                let idx: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
                if idx.len() > max {
                    return false;
                }
                let diffs: Vec<QVec> = idx[1..].iter().map(|&i| &points[i] - &points[idx[0]]).collect();
                matrix_rank(&diffs) == idx.len() - 1
            })
            .count()
    }

    proptest! {
        #[test]
        fn matches_naive_rank_tests(
            raw in prop::collection::vec(prop::collection::vec(-2i64..=2, 3), 1..8),
            max in 1usize..=4,
        ) {
            let points: Vec<QVec> = raw.iter().map(|v| QVec::from_ints(v)).collect();
            let got: Vec<Vec<usize>> = affinely_independent_subsets(&points, max).collect();
            prop_assert_eq!(got.len(), naive_count(&points, max));
            let mut sorted = got.clone();
            sorted.sort();
            prop_assert_eq!(sorted, got);
        }
    }
}
