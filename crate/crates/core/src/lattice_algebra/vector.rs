use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};

/// A point of the lattice `Z^n` (or of its dual).
///
/// Ordering is lexicographic on the coordinates, which is what every sorted
/// point set in the crate relies on.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }

    pub fn from_i64s(coords: &[i64]) -> Self {
        IntVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        IntVector(vec![BigInt::zero(); rank])
    }

    /// The `i`-th standard basis vector of `Z^rank`.
    pub fn unit(rank: usize, i: usize) -> Self {
        let mut v = Self::zero(rank);
        v.0[i] = BigInt::from(1);
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<BigInt> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVector) -> BigInt {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(BigInt::zero(), |acc, (a, b)| acc + a * b)
    }

    /// Non-negative gcd of the coordinates (zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn scaled(&self, k: &BigInt) -> IntVector {
        IntVector(self.0.iter().map(|c| c * k).collect())
    }

    /// Exact division of every coordinate; the caller guarantees divisibility.
    pub(crate) fn div_exact(&self, k: &BigInt) -> IntVector {
        IntVector(
            self.0
                .iter()
                .map(|c| {
                    debug_assert!((c % k).is_zero());
                    c / k
                })
                .collect(),
        )
    }

    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub(crate) fn check_dim(&self, expected: usize) -> Result<()> {
        if self.dim() == expected {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected,
                found: self.dim(),
            })
        }
    }
}

/// Divides `v` by the positive gcd of its entries.
pub fn primitive(v: &IntVector) -> Result<IntVector> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let g = v.content();
    Ok(v.div_exact(&g))
}

impl From<Vec<BigInt>> for IntVector {
    fn from(coords: Vec<BigInt>) -> Self {
        IntVector(coords)
    }
}

impl From<&[i64]> for IntVector {
    fn from(coords: &[i64]) -> Self {
        IntVector::from_i64s(coords)
    }
}

impl<const N: usize> From<[i64; N]> for IntVector {
    fn from(coords: [i64; N]) -> Self {
        IntVector::from_i64s(&coords)
    }
}

impl Index<usize> for IntVector {
    type Output = BigInt;

    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl Add for &IntVector {
    type Output = IntVector;

    fn add(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;

    fn sub(self, rhs: &IntVector) -> IntVector {
        debug_assert_eq!(self.dim(), rhs.dim());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &IntVector {
    type Output = IntVector;

    fn neg(self) -> IntVector {
        IntVector(self.0.iter().map(|c| -c).collect())
    }
}

/// Serializes as a number when it fits in `i64`, else as a decimal string.
pub fn serialize_bigint<S: serde::Serializer>(x: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i64::try_from(x) {
        Ok(v) => s.serialize_i64(v),
        Err(_) => s.serialize_str(&x.to_string()),
    }
}

struct Json<'a>(&'a BigInt);

impl serde::Serialize for Json<'_> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        serialize_bigint(self.0, s)
    }
}

impl serde::Serialize for IntVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.0.len()))?;
        for c in &self.0 {
            seq.serialize_element(&Json(c))?;
        }
        seq.end()
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// `floor(a / b)` for `b != 0`.
pub(crate) fn floor_div(a: &BigInt, b: &BigInt) -> BigInt {
    a.div_floor(b)
}

/// `ceil(a / b)` for `b != 0`.
pub(crate) fn ceil_div(a: &BigInt, b: &BigInt) -> BigInt {
    -((-a).div_floor(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(
            primitive(&IntVector::from([2, 4, 6])).unwrap(),
            IntVector::from([1, 2, 3])
        );
        assert_eq!(
            primitive(&IntVector::from([0, 0, 5])).unwrap(),
            IntVector::from([0, 0, 1])
        );
        assert_eq!(
            primitive(&IntVector::from([-2, 2])).unwrap(),
            IntVector::from([-1, 1])
        );
        assert_eq!(primitive(&IntVector::zero(3)), Err(Error::ZeroVector));
    }

    #[test]
    fn ordering_is_lexicographic() {
        let mut v = vec![
            IntVector::from([1, 0]),
            IntVector::from([0, 5]),
            IntVector::from([0, -1]),
        ];
        v.sort();
        assert_eq!(
            v,
            vec![
                IntVector::from([0, -1]),
                IntVector::from([0, 5]),
                IntVector::from([1, 0])
            ]
        );
    }

    #[test]
    fn rounding_helpers() {
        let b = BigInt::from(3);
        assert_eq!(floor_div(&BigInt::from(-4), &b), BigInt::from(-2));
        assert_eq!(ceil_div(&BigInt::from(-4), &b), BigInt::from(-1));
        assert_eq!(ceil_div(&BigInt::from(4), &b), BigInt::from(2));
        assert_eq!(floor_div(&BigInt::from(4), &BigInt::from(-3)), BigInt::from(-2));
    }
}
