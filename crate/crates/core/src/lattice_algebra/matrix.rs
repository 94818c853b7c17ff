use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::vector::IntVector;
use crate::error::{Error, Result};

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        Ok(IntMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix whose rows are the given vectors (all of equal length).
    pub fn from_rows(rows: &[IntVector]) -> Result<Self> {
        let cols = rows.first().map_or(0, IntVector::dim);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            r.check_dim(cols)?;
            entries.extend(r.coords().iter().cloned());
        }
        Self::new(rows.len(), cols, entries)
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(cols: &[IntVector]) -> Result<Self> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let vs: Vec<IntVector> = rows.iter().map(|r| IntVector::from_i64s(r)).collect();
        Self::from_rows(&vs).expect("ragged rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector::new(self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn row_vectors(&self) -> Vec<IntVector> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * rhs.cols + j;
                    out.entries[idx] += a * rhs.get(k, j);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &IntVector) -> Result<IntVector> {
        v.check_dim(self.cols)?;
        Ok(IntVector::new(
            (0..self.rows)
                .map(|i| {
                    (0..self.cols).fold(BigInt::zero(), |acc, j| acc + self.get(i, j) * &v[j])
                })
                .collect(),
        ))
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(sign * &a[n - 1][n - 1])
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&i| !a[i][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for i in rank + 1..self.rows {
                if a[i][col].is_zero() {
                    continue;
                }
                let f = a[i][col].clone();
                let g = a[rank][col].clone();
                for j in col..self.cols {
                    a[i][j] = &a[i][j] * &g - &a[rank][j] * &f;
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Matrix with row `skip_row` and column `skip_col` removed.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> IntMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_row) {
            for j in (0..self.cols).filter(|&j| j != skip_col) {
                entries.push(self.get(i, j).clone());
            }
        }
        IntMatrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            entries,
        }
    }

    /// Classical adjugate, so that `A * adj(A) = det(A) * I`.
    pub fn adjugate(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        if n == 1 {
            return Ok(IntMatrix::identity(1));
        }
        let mut adj = IntMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let c = self.minor(i, j).determinant()?;
                let c = if (i + j) % 2 == 0 { c } else { -c };
                adj.set(j, i, c);
            }
        }
        Ok(adj)
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square()
            && self
                .determinant()
                .map(|d| d.abs().is_one())
                .unwrap_or(false)
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        self.row_vectors().iter().map(IntVector::to_i64s).collect()
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] -= factor * row[source]`
    pub(crate) fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(source, j) * factor;
            self.entries[target * self.cols + j] -= v;
        }
    }

    /// `col[target] -= factor * col[source]`
    pub(crate) fn sub_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, source) * factor;
            self.entries[i * self.cols + target] -= v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let idx = i * self.cols + j;
            self.entries[idx] = -&self.entries[idx];
        }
    }
}

/// Serialized row-major as a list of rows.
impl serde::Serialize for IntMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.row_vectors())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", self.row(i))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_and_adjugate() {
        let a = IntMatrix::from_i64_rows(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let det = a.determinant().unwrap();
        assert_eq!(det, BigInt::from(18));
        let prod = a.mul(&a.adjugate().unwrap()).unwrap();
        let mut expect = IntMatrix::identity(3);
        for i in 0..3 {
            expect.set(i, i, det.clone());
        }
        assert_eq!(prod, expect);
    }

    #[test]
    fn determinant_needs_pivoting() {
        let a = IntMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.determinant().unwrap(), BigInt::from(-1));
        let singular = IntMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(singular.determinant().unwrap(), BigInt::zero());
    }

    #[test]
    fn rank_of_dependent_rows() {
        let a = IntMatrix::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank(), 2);
        assert_eq!(IntMatrix::zeros(2, 3).rank(), 0);
    }

    #[test]
    fn new_rejects_bad_entry_count() {
        assert!(IntMatrix::new(2, 2, vec![BigInt::one(); 3]).is_err());
    }
}
