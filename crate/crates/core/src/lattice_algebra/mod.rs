//! Exact integer linear algebra: vectors, matrices, Hermite/Smith normal
//! forms, integer system solving and affine unimodular maps.
//!
//! Everything is arbitrary precision; there is no floating point anywhere.

mod map;
mod matrix;
mod normal_form;
mod vector;

pub use map::{apply_map, AffineUnimodularMap};
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_normal_form, smith_normal_form, solve_all_ones_system, solve_integer_system,
    unimodular_inverse, IntegerSolution,
};
pub use vector::{primitive, serialize_bigint, IntVector};

pub(crate) use vector::{ceil_div, floor_div};

use num_bigint::BigInt;

/// Rank of the affine span of `points` (`-1` is reported as `None`).
pub(crate) fn affine_rank(points: &[&IntVector]) -> Option<usize> {
    let (first, rest) = points.split_first()?;
    if rest.is_empty() {
        return Some(0);
    }
    let diffs: Vec<IntVector> = rest.iter().map(|p| *p - *first).collect();
    Some(IntMatrix::from_rows(&diffs).expect("equal dims").rank())
}

/// Greedily picks indices of an affinely independent subset of `points`
/// of maximal size.
pub(crate) fn affinely_independent_subset(points: &[&IntVector]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut diffs: Vec<IntVector> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if chosen.is_empty() {
            chosen.push(i);
            continue;
        }
        let d = *p - points[chosen[0]];
        if d.is_zero() {
            continue;
        }
        diffs.push(d);
        let rank = IntMatrix::from_rows(&diffs).expect("equal dims").rank();
        if rank == diffs.len() {
            chosen.push(i);
        } else {
            diffs.pop();
        }
    }
    chosen
}

/// Primitive normal of the hyperplane through `d` affinely independent
/// points of `Z^d` (generalised cross product of the difference vectors).
pub(crate) fn hyperplane_normal(points: &[&IntVector]) -> IntVector {
    let d = points[0].dim();
    debug_assert_eq!(points.len(), d);
    let diffs: Vec<IntVector> = points[1..].iter().map(|p| *p - points[0]).collect();
    let m = IntMatrix::from_rows(&diffs).expect("equal dims");
    let coords: Vec<BigInt> = (0..d)
        .map(|j| {
            let minor = if d == 1 {
                BigInt::from(1)
            } else {
                column_deleted(&m, j).determinant().expect("square")
            };
            if j % 2 == 0 {
                minor
            } else {
                -minor
            }
        })
        .collect();
    let n = IntVector::new(coords);
    debug_assert!(!n.is_zero());
    primitive(&n).expect("independent points give a nonzero normal")
}

fn column_deleted(m: &IntMatrix, skip: usize) -> IntMatrix {
    let mut entries = Vec::with_capacity(m.rows() * (m.cols() - 1));
    for i in 0..m.rows() {
        for j in (0..m.cols()).filter(|&j| j != skip) {
            entries.push(m.get(i, j).clone());
        }
    }
    IntMatrix::new(m.rows(), m.cols() - 1, entries).expect("consistent shape")
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn normal_is_orthogonal_to_differences() {
        let pts = [
            IntVector::from([1, 0, 0]),
            IntVector::from([0, 2, 0]),
            IntVector::from([0, 0, 3]),
        ];
        let refs: Vec<&IntVector> = pts.iter().collect();
        let n = hyperplane_normal(&refs);
        for p in &pts[1..] {
            assert!((p - &pts[0]).dot(&n).is_zero());
        }
        assert_eq!(primitive(&n).unwrap(), n);
    }

    #[test]
    fn independent_subset_skips_dependent_points() {
        let pts = [
            IntVector::from([0, 0]),
            IntVector::from([1, 1]),
            IntVector::from([2, 2]),
            IntVector::from([0, 1]),
        ];
        let refs: Vec<&IntVector> = pts.iter().collect();
        assert_eq!(affinely_independent_subset(&refs), vec![0, 1, 3]);
        assert_eq!(affine_rank(&refs), Some(2));
        assert_eq!(affine_rank(&refs[..3]), Some(1));
    }
}
