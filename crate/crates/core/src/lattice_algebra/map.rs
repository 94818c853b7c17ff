use super::matrix::IntMatrix;
use super::normal_form::unimodular_inverse;
use super::vector::IntVector;
use crate::error::{Error, Result};

/// `x -> linear * x + translation` with `|det linear| = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct AffineUnimodularMap {
    linear: IntMatrix,
    translation: IntVector,
}

impl AffineUnimodularMap {
    pub fn new(linear: IntMatrix, translation: IntVector) -> Result<Self> {
        if !linear.is_unimodular() {
            return Err(Error::NotUnimodular);
        }
        translation.check_dim(linear.rows())?;
        Ok(AffineUnimodularMap {
            linear,
            translation,
        })
    }

    pub fn identity(rank: usize) -> Self {
        AffineUnimodularMap {
            linear: IntMatrix::identity(rank),
            translation: IntVector::zero(rank),
        }
    }

    pub fn translation_by(t: IntVector) -> Self {
        AffineUnimodularMap {
            linear: IntMatrix::identity(t.dim()),
            translation: t,
        }
    }

    pub fn linear(&self) -> &IntMatrix {
        &self.linear
    }

    pub fn translation(&self) -> &IntVector {
        &self.translation
    }

    pub fn rank(&self) -> usize {
        self.translation.dim()
    }

    pub fn apply(&self, p: &IntVector) -> Result<IntVector> {
        p.check_dim(self.rank())?;
        Ok(&self.linear.mul_vec(p)? + &self.translation)
    }

    pub fn inverse(&self) -> AffineUnimodularMap {
        let inv = unimodular_inverse(&self.linear).expect("linear part is unimodular");
        let t = -&inv.mul_vec(&self.translation).expect("square");
        AffineUnimodularMap {
            linear: inv,
            translation: t,
        }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &AffineUnimodularMap) -> Result<AffineUnimodularMap> {
        let linear = self.linear.mul(&first.linear)?;
        let translation = self.apply(&first.translation)?;
        Ok(AffineUnimodularMap {
            linear,
            translation,
        })
    }
}

/// Applies `f` to `p`.
pub fn apply_map(f: &AffineUnimodularMap, p: &IntVector) -> Result<IntVector> {
    f.apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn apply_examples() {
        let id = AffineUnimodularMap::identity(2);
        assert_eq!(
            apply_map(&id, &IntVector::from([3, 5])).unwrap(),
            IntVector::from([3, 5])
        );
        let shear = AffineUnimodularMap::new(
            IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]),
            IntVector::zero(2),
        )
        .unwrap();
        assert_eq!(
            apply_map(&shear, &IntVector::from([0, 1])).unwrap(),
            IntVector::from([1, 1])
        );
        let t = AffineUnimodularMap::translation_by(IntVector::from([1, 0]));
        assert_eq!(
            apply_map(&t, &IntVector::zero(2)).unwrap(),
            IntVector::from([1, 0])
        );
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let id = AffineUnimodularMap::identity(2);
        assert!(matches!(
            apply_map(&id, &IntVector::from([1, 2, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn non_unimodular_rejected() {
        let m = IntMatrix::from_i64_rows(&[&[2, 0], &[0, 1]]);
        assert_eq!(
            AffineUnimodularMap::new(m, IntVector::zero(2)),
            Err(Error::NotUnimodular)
        );
    }

    #[test]
    fn inverse_and_composition() {
        let f = AffineUnimodularMap::new(
            IntMatrix::from_i64_rows(&[&[2, 1], &[1, 1]]),
            IntVector::from([3, -1]),
        )
        .unwrap();
        let p = IntVector::from([4, 7]);
        let q = f.apply(&p).unwrap();
        assert_eq!(f.inverse().apply(&q).unwrap(), p);
        let ff = f.after(&f).unwrap();
        assert_eq!(ff.apply(&p).unwrap(), f.apply(&q).unwrap());
    }
}
