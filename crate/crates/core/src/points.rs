//! Lattice-point enumeration of polytopes and their dilates, the
//! level-generation equality `(kP ∩ M) + (P ∩ M) = ((k+1)P) ∩ M`, and
//! normality testing.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::Result;
use crate::lattice_algebra::{ceil_div, floor_div, IntVector};
use crate::polytope::{Facet, LatticePolytope};

/// Sorted, duplicate-free set of lattice points.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PointSet {
    points: Vec<IntVector>,
}

impl PointSet {
    pub fn new(mut points: Vec<IntVector>) -> Self {
        points.sort();
        points.dedup();
        PointSet { points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &IntVector) -> bool {
        self.points.binary_search(p).is_ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, IntVector> {
        self.points.iter()
    }

    pub fn as_slice(&self) -> &[IntVector] {
        &self.points
    }

    pub fn into_vec(self) -> Vec<IntVector> {
        self.points
    }

    pub fn is_subset(&self, other: &PointSet) -> bool {
        self.points.iter().all(|p| other.contains(p))
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a IntVector;
    type IntoIter = std::slice::Iter<'a, IntVector>;

    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

impl FromIterator<IntVector> for PointSet {
    fn from_iter<I: IntoIterator<Item = IntVector>>(iter: I) -> Self {
        PointSet::new(iter.into_iter().collect())
    }
}

/// How to enumerate lattice points of a full-dimensional polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EnumerationStrategy {
    /// Scan the integer bounding box and filter by the facet inequalities.
    BoxScan,
    /// Coordinate-by-coordinate slicing, using the exact projections of the
    /// polytope onto leading coordinates to bound each coordinate.
    #[default]
    Slicing,
}

pub fn lattice_points(p: &LatticePolytope) -> PointSet {
    lattice_points_with(p, EnumerationStrategy::default())
}

pub fn lattice_points_with(p: &LatticePolytope, strategy: EnumerationStrategy) -> PointSet {
    if p.dim() == 0 {
        return PointSet::new(p.vertices().to_vec());
    }
    if !p.is_full_dimensional() {
        let (model, frame) = p.span_model();
        return lattice_points_with(&model, strategy)
            .iter()
            .map(|y| frame.from_model(y))
            .collect();
    }
    let pts = match strategy {
        EnumerationStrategy::BoxScan => box_scan(p, |x| p.contains(x)),
        EnumerationStrategy::Slicing => slicing(p),
    };
    PointSet { points: pts }
}

/// Lattice points strictly inside a full-dimensional polytope; empty for a
/// lower-dimensional one (its topological interior is empty).
pub fn interior_lattice_points(p: &LatticePolytope) -> PointSet {
    if !p.is_full_dimensional() || p.dim() == 0 {
        return PointSet::default();
    }
    let facets = p.facets().expect("full-dimensional");
    let pts = slicing(p)
        .into_iter()
        .filter(|x| facets.iter().all(|f| f.evaluate(x).is_positive()))
        .collect();
    PointSet { points: pts }
}

/// Lattice points in the relative interior, computed in the span model.
pub fn relative_interior_lattice_points(p: &LatticePolytope) -> PointSet {
    if p.dim() == 0 {
        return PointSet::new(p.vertices().to_vec());
    }
    if p.is_full_dimensional() {
        return interior_lattice_points(p);
    }
    let (model, frame) = p.span_model();
    interior_lattice_points(&model)
        .iter()
        .map(|y| frame.from_model(y))
        .collect()
}

pub fn count_interior_of_dilate(p: &LatticePolytope, k: u64) -> usize {
    interior_lattice_points(&p.dilate(k).expect("k >= 1")).len()
}

fn box_scan(p: &LatticePolytope, keep: impl Fn(&IntVector) -> bool) -> Vec<IntVector> {
    let (lo, hi) = p.bounding_box();
    let n = lo.dim();
    let mut out = Vec::new();
    let mut cur: Vec<BigInt> = lo.coords().to_vec();
    loop {
        let x = IntVector::new(cur.clone());
        if keep(&x) {
            out.push(x);
        }
        // odometer, last coordinate fastest
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < hi[i] {
                cur[i] += 1;
                for (j, c) in cur.iter_mut().enumerate().skip(i + 1) {
                    *c = lo[j].clone();
                }
                break;
            }
        }
    }
}

/// Facet systems of the projections onto the first `i` coordinates, for
/// `i = 1..=d`.
fn projection_systems(p: &LatticePolytope) -> Vec<Vec<Facet>> {
    let d = p.dim();
    let mut systems = Vec::with_capacity(d);
    for i in 1..d {
        let proj: Vec<IntVector> = p
            .vertices()
            .iter()
            .map(|v| IntVector::new(v.coords()[..i].to_vec()))
            .collect();
        let q = LatticePolytope::hull(&proj, i).expect("nonempty");
        systems.push(q.facets().expect("projection of a full-dimensional polytope").to_vec());
    }
    systems.push(p.facets().expect("full-dimensional").to_vec());
    systems
}

fn slicing(p: &LatticePolytope) -> Vec<IntVector> {
    let systems = projection_systems(p);
    let d = p.dim();
    let mut out = Vec::new();
    let mut prefix: Vec<BigInt> = Vec::with_capacity(d);
    slice_level(&systems, 0, &mut prefix, &mut out);
    out
}

fn slice_level(systems: &[Vec<Facet>], level: usize, prefix: &mut Vec<BigInt>, out: &mut Vec<IntVector>) {
    let mut lo: Option<BigInt> = None;
    let mut hi: Option<BigInt> = None;
    for f in &systems[level] {
        let a = &f.normal[level];
        if a.is_zero() {
            continue;
        }
        let mut s = f.offset.clone();
        for (j, x) in prefix.iter().enumerate() {
            s += &f.normal[j] * x;
        }
        // a * x + s >= 0
        if a.is_positive() {
            let b = ceil_div(&-s, a);
            if lo.as_ref().is_none_or(|l| &b > l) {
                lo = Some(b);
            }
        } else {
            let b = floor_div(&s, &-a);
            if hi.as_ref().is_none_or(|h| &b < h) {
                hi = Some(b);
            }
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        unreachable!("bounded polytope has bounds in every coordinate")
    };
    let mut x = lo;
    while x <= hi {
        prefix.push(x.clone());
        if level + 1 == systems.len() {
            out.push(IntVector::new(prefix.clone()));
        } else {
            slice_level(systems, level + 1, prefix, out);
        }
        prefix.pop();
        x += 1;
    }
}

/// Outcome of testing `(kP ∩ M) + (P ∩ M) = ((k+1)P) ∩ M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelGeneration {
    pub k: u64,
    pub holds: bool,
    /// Points of `(k+1)P` that are not such a sum.
    pub missing: Vec<IntVector>,
}

pub fn level_generation_check(p: &LatticePolytope, k: u64) -> Result<LevelGeneration> {
    let base = lattice_points(p);
    let level_k: HashSet<IntVector> = lattice_points(&p.dilate(k)?).into_vec().into_iter().collect();
    let next = lattice_points(&p.dilate(k + 1)?);
    let missing: Vec<IntVector> = next
        .iter()
        .filter(|x| !base.iter().any(|m| level_k.contains(&(*x - m))))
        .cloned()
        .collect();
    Ok(LevelGeneration {
        k,
        holds: missing.is_empty(),
        missing,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Normality {
    pub normal: bool,
    pub first_failing_k: Option<u64>,
    pub missing: Vec<IntVector>,
}

/// Tests the level-generation equality for `k = 1..=max(1, n-2)`; every level
/// `k >= n-1` holds for all lattice `n`-polytopes and is not re-tested.
pub fn normality_check(p: &LatticePolytope) -> Result<Normality> {
    let n = p.dim() as u64;
    let top = n.saturating_sub(2).max(1);
    for k in 1..=top {
        let g = level_generation_check(p, k)?;
        if !g.holds {
            return Ok(Normality {
                normal: false,
                first_failing_k: Some(k),
                missing: g.missing,
            });
        }
    }
    Ok(Normality {
        normal: true,
        first_failing_k: None,
        missing: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(points: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64_points(points).unwrap()
    }

    fn d3() -> LatticePolytope {
        poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])
    }

    #[test]
    fn standard_simplex_counts() {
        let d = poly(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(lattice_points(&d).len(), 3);
        assert_eq!(lattice_points(&d.dilate(2).unwrap()).len(), 6);
        assert!(interior_lattice_points(&d.dilate(2).unwrap()).is_empty());
        assert_eq!(interior_lattice_points(&d.dilate(3).unwrap()).len(), 1);
    }

    #[test]
    fn empty_tetrahedron() {
        let pts = lattice_points(&d3());
        assert_eq!(pts.as_slice(), d3().vertices());
        let int2 = interior_lattice_points(&d3().dilate(2).unwrap());
        assert_eq!(int2.as_slice(), &[IntVector::from([1, 1, 1])]);
    }

    #[test]
    fn p2_interior() {
        let p2 = poly(&[&[0, 0], &[2, 0], &[0, 1]]);
        let int = interior_lattice_points(&p2.dilate(2).unwrap());
        assert_eq!(int.as_slice(), &[IntVector::from([1, 1])]);
    }

    #[test]
    fn strategies_agree() {
        let p = poly(&[&[0, 0, 0], &[3, 1, 0], &[1, 3, 1], &[2, 0, 3], &[0, 2, 2]]);
        for k in 1..=3 {
            let kp = p.dilate(k).unwrap();
            assert_eq!(
                lattice_points_with(&kp, EnumerationStrategy::BoxScan),
                lattice_points_with(&kp, EnumerationStrategy::Slicing)
            );
        }
    }

    #[test]
    fn lower_dimensional_points() {
        let seg = poly(&[&[0, 0, 0], &[2, 4, 6]]);
        assert_eq!(lattice_points(&seg).len(), 3);
        assert!(interior_lattice_points(&seg).is_empty());
        assert_eq!(
            relative_interior_lattice_points(&seg).as_slice(),
            &[IntVector::from([1, 2, 3])]
        );
    }

    #[test]
    fn level_generation_examples() {
        let g = level_generation_check(&d3(), 1).unwrap();
        assert!(!g.holds);
        assert_eq!(g.missing, vec![IntVector::from([1, 1, 1])]);
        assert!(level_generation_check(&d3().dilate(2).unwrap(), 1).unwrap().holds);
        let tri = poly(&[&[0, 0], &[3, 1], &[1, 2]]);
        assert!(level_generation_check(&tri, 1).unwrap().holds);
    }

    #[test]
    fn normality_examples() {
        let n = normality_check(&d3()).unwrap();
        assert!(!n.normal);
        assert_eq!(n.first_failing_k, Some(1));
        let basic4 = poly(&[
            &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1],
        ]);
        assert!(normality_check(&basic4).unwrap().normal);
        let polygon = poly(&[&[0, 0], &[5, 2], &[1, 3], &[-1, 1]]);
        assert!(normality_check(&polygon).unwrap().normal);
    }
}
