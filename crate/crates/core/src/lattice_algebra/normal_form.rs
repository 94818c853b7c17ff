//! Hermite and Smith normal forms over the integers, and integer linear
//! system solving built on them.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;
use super::vector::{floor_div, IntVector};
use crate::error::{Error, Result};

/// Row-style Hermite normal form.
///
/// Returns `(H, U)` with `H = U * A`, `U` unimodular, and `H` in upper echelon
/// form: pivots positive and the entries above each pivot reduced into
/// `[0, pivot)`.
pub fn hermite_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u, _) = hermite_with_pivots(a);
    (h, u)
}

/// Same as [`hermite_normal_form`], also returning the pivot columns.
pub(crate) fn hermite_with_pivots(a: &IntMatrix) -> (IntMatrix, IntMatrix, Vec<usize>) {
    let m = a.rows();
    let n = a.cols();
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        if row == m {
            break;
        }
        loop {
            // smallest nonzero magnitude among the remaining rows
            let best = (row..m)
                .filter(|&i| !h.get(i, col).is_zero())
                .min_by_key(|&i| h.get(i, col).abs());
            let Some(best) = best else { break };
            h.swap_rows(row, best);
            u.swap_rows(row, best);
            let mut done = true;
            for i in row + 1..m {
                if h.get(i, col).is_zero() {
                    continue;
                }
                let q = floor_div(h.get(i, col), h.get(row, col));
                h.sub_row_multiple(i, row, &q);
                u.sub_row_multiple(i, row, &q);
                if !h.get(i, col).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(row, col).is_zero() {
            continue;
        }
        if h.get(row, col).is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        for i in 0..row {
            let q = floor_div(h.get(i, col), h.get(row, col));
            h.sub_row_multiple(i, row, &q);
            u.sub_row_multiple(i, row, &q);
        }
        pivots.push(col);
        row += 1;
    }
    (h, u, pivots)
}

/// Smith normal form `D = U * A * V` with `U`, `V` unimodular and the
/// diagonal of `D` non-negative with `d_1 | d_2 | ...`.
pub fn smith_normal_form(a: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let m = a.rows();
    let n = a.cols();
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    for t in 0..m.min(n) {
        loop {
            // move the smallest nonzero entry of the trailing block to (t, t)
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = d.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.get(bi, bj).abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return (d, u, v);
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut clean = true;
            for i in t + 1..m {
                let q = floor_div(d.get(i, t), d.get(t, t));
                d.sub_row_multiple(i, t, &q);
                u.sub_row_multiple(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                let q = floor_div(d.get(t, j), d.get(t, t));
                d.sub_col_multiple(j, t, &q);
                v.sub_col_multiple(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into row t and retry
            let pivot = d.get(t, t).clone();
            let offending = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !(d.get(i, j) % &pivot).is_zero()));
            match offending {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    d.sub_row_multiple(t, i, &minus_one);
                    u.sub_row_multiple(t, i, &minus_one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    (d, u, v)
}

/// Inverse of a unimodular matrix (the HNF of a unimodular matrix is `I`).
pub fn unimodular_inverse(a: &IntMatrix) -> Result<IntMatrix> {
    if !a.is_unimodular() {
        return Err(Error::NotUnimodular);
    }
    let (h, u) = hermite_normal_form(a);
    debug_assert_eq!(h, IntMatrix::identity(a.rows()));
    Ok(u)
}

/// An integer solution of a linear system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerSolution {
    pub point: IntVector,
    /// `true` when the coefficient matrix has full column rank.
    pub unique: bool,
}

/// Solves `A x = b` over the integers; `None` when no integer solution exists.
///
/// When the solution is not unique an arbitrary one is returned with
/// `unique = false`.
pub fn solve_integer_system(a: &IntMatrix, b: &IntVector) -> Result<Option<IntegerSolution>> {
    b.check_dim(a.rows())?;
    let n = a.cols();
    let k = a.rows();
    // U * A^T = H, so A = H^T * U^{-T}; with x = U^T y the system is H^T y = b.
    let (h, u, pivots) = hermite_with_pivots(&a.transpose());
    let rank = pivots.len();
    let mut y = vec![BigInt::zero(); n];
    let mut next_pivot = 0;
    for j in 0..k {
        // only rows whose pivot lies strictly left of column j contribute
        let mut acc = b[j].clone();
        for (i, yi) in y.iter().enumerate().take(next_pivot) {
            acc -= h.get(i, j) * yi;
        }
        if next_pivot < rank && pivots[next_pivot] == j {
            let p = h.get(next_pivot, j);
            if !(&acc % p).is_zero() {
                return Ok(None);
            }
            y[next_pivot] = acc / p;
            next_pivot += 1;
        } else if !acc.is_zero() {
            return Ok(None);
        }
    }
    let x = u.transpose().mul_vec(&IntVector::new(y))?;
    Ok(Some(IntegerSolution {
        point: x,
        unique: rank == n,
    }))
}

/// Solves `<u_i, m> = 1` for every normal `u_i`.
///
/// This is the linear-algebra form of the Gorenstein condition at a vertex.
pub fn solve_all_ones_system(normals: &[IntVector]) -> Result<Option<IntegerSolution>> {
    if normals.is_empty() {
        return Err(Error::EmptyInput);
    }
    let a = IntMatrix::from_rows(normals)?;
    let ones = IntVector::new(vec![BigInt::one(); normals.len()]);
    solve_integer_system(&a, &ones)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows)
    }

    #[test]
    fn hnf_identity() {
        let (h, u) = hermite_normal_form(&IntMatrix::identity(2));
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, IntMatrix::identity(2));
    }

    #[test]
    fn hnf_permutation() {
        let a = m(&[&[0, 1], &[1, 0]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, IntMatrix::identity(2));
        assert_eq!(u, a);
    }

    #[test]
    fn hnf_reduces_above_pivot() {
        let a = m(&[&[2, 1], &[0, 1]]);
        let (h, u) = hermite_normal_form(&a);
        assert_eq!(h, m(&[&[2, 0], &[0, 1]]));
        assert_eq!(u, m(&[&[1, -1], &[0, 1]]));
        assert_eq!(u.mul(&a).unwrap(), h);
        assert_eq!(u.determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn snf_examples() {
        let (d, _, _) = smith_normal_form(&IntMatrix::identity(3));
        assert_eq!(d, IntMatrix::identity(3));
        let a = m(&[&[2, 0], &[0, 3]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(d, m(&[&[1, 0], &[0, 6]]));
        assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d);
        let (d, _, _) = smith_normal_form(&m(&[&[2, 0], &[0, 4]]));
        assert_eq!(d, m(&[&[2, 0], &[0, 4]]));
    }

    #[test]
    fn snf_rectangular() {
        let a = m(&[&[1, 1, 0], &[0, 2, 4]]);
        let (d, u, v) = smith_normal_form(&a);
        assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d);
        assert!(u.is_unimodular() && v.is_unimodular());
        assert_eq!(d.get(0, 0), &BigInt::from(1));
        assert_eq!(d.get(1, 1), &BigInt::from(2));
    }

    #[test]
    fn all_ones_examples() {
        let e = |v: &[i64]| IntVector::from_i64s(v);
        let s = solve_all_ones_system(&[e(&[1, 0]), e(&[0, 1])]).unwrap().unwrap();
        assert_eq!(s.point, e(&[1, 1]));
        assert!(s.unique);
        assert_eq!(solve_all_ones_system(&[e(&[1, 0]), e(&[0, 2])]).unwrap(), None);
        let s = solve_all_ones_system(&[e(&[0, 1]), e(&[2, -1])]).unwrap().unwrap();
        assert_eq!(s.point, e(&[1, 1]));
    }

    #[test]
    fn all_ones_non_unique_is_flagged() {
        let s = solve_all_ones_system(&[IntVector::from([1, 1, 0])]).unwrap().unwrap();
        assert!(!s.unique);
        assert_eq!(IntVector::from([1, 1, 0]).dot(&s.point), BigInt::one());
    }

    #[test]
    fn inconsistent_overdetermined_system() {
        let normals = [
            IntVector::from([1, 0]),
            IntVector::from([0, 1]),
            IntVector::from([1, 1]),
        ];
        assert_eq!(solve_all_ones_system(&normals).unwrap(), None);
    }

    #[test]
    fn unimodular_inverse_roundtrip() {
        let a = m(&[&[2, 1, 0], &[1, 1, 0], &[3, 0, 1]]);
        let inv = unimodular_inverse(&a).unwrap();
        assert_eq!(a.mul(&inv).unwrap(), IntMatrix::identity(3));
        assert_eq!(
            unimodular_inverse(&m(&[&[2, 0], &[0, 1]])),
            Err(Error::NotUnimodular)
        );
    }
}
