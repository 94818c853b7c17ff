//! The canonical polytopes `Δ_0^n`, `P_n`, `Q_n`, `Q'_n`, `R_n`, `D_n` and
//! classifiers that return a verified unimodular witness onto one of them.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::cones::is_gorenstein_polytope;
use crate::error::{Error, Result};
use crate::lattice_algebra::{AffineUnimodularMap, IntVector};
use crate::points::{interior_lattice_points, lattice_points};
use crate::polytope::{lattice_equivalent, LatticePolytope};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CanonicalFamily {
    BasicSimplex,
    Pn,
    Qn,
    QprimeN,
    /// `R_n(a_1, ..., a_n)` with `1 <= a_1 <= ... <= a_n`.
    Rn(Vec<u64>),
    Dn,
    Other,
}

impl CanonicalFamily {
    /// `R_n` with the given parameters, sorted; all must be positive.
    pub fn rn(mut params: Vec<u64>) -> Result<CanonicalFamily> {
        if params.contains(&0) {
            return Err(Error::InvalidParameters("R_n parameters must be positive".into()));
        }
        params.sort_unstable();
        Ok(CanonicalFamily::Rn(params))
    }

    pub fn tag(&self) -> &'static str {
        match self {
            CanonicalFamily::BasicSimplex => "BasicSimplex",
            CanonicalFamily::Pn => "Pn",
            CanonicalFamily::Qn => "Qn",
            CanonicalFamily::QprimeN => "QprimeN",
            CanonicalFamily::Rn(_) => "Rn",
            CanonicalFamily::Dn => "Dn",
            CanonicalFamily::Other => "Other",
        }
    }

    pub fn params(&self) -> &[u64] {
        match self {
            CanonicalFamily::Rn(a) => a,
            _ => &[],
        }
    }

    fn min_rank(&self) -> usize {
        match self {
            CanonicalFamily::QprimeN | CanonicalFamily::Rn(_) | CanonicalFamily::Dn => 3,
            _ => 2,
        }
    }
}

impl fmt::Display for CanonicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CanonicalFamily::Rn(a) => {
                let a: Vec<String> = a.iter().map(u64::to_string).collect();
                write!(f, "Rn({})", a.join(","))
            }
            other => f.write_str(other.tag()),
        }
    }
}

impl Serialize for CanonicalFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationVerdict {
    pub family: CanonicalFamily,
    /// Maps the input's vertex set onto the canonical model's.
    pub witness: Option<AffineUnimodularMap>,
}

impl ClassificationVerdict {
    fn other() -> Self {
        ClassificationVerdict {
            family: CanonicalFamily::Other,
            witness: None,
        }
    }
}

fn e(n: usize, i: usize) -> IntVector {
    IntVector::unit(n, i)
}

fn scaled_unit(n: usize, i: usize, k: u64) -> IntVector {
    e(n, i).scaled(&BigInt::from(k))
}

/// The literal vertex sets in standard coordinates.
pub fn canonical_polytope(family: &CanonicalFamily, n: usize) -> Result<LatticePolytope> {
    if *family == CanonicalFamily::Other {
        return Err(Error::InvalidParameters("Other has no canonical model".into()));
    }
    if n < family.min_rank() {
        return Err(Error::RankTooSmall {
            family: family.tag(),
            min: family.min_rank(),
            rank: n,
        });
    }
    match family {
        CanonicalFamily::Rn(a) => r_family(a),
        _ => {
            let mut pts = vec![IntVector::zero(n)];
            match family {
                CanonicalFamily::BasicSimplex => pts.extend((0..n).map(|i| e(n, i))),
                CanonicalFamily::Pn => {
                    pts.push(scaled_unit(n, 0, 2));
                    pts.extend((1..n).map(|i| e(n, i)));
                }
                CanonicalFamily::Qn => {
                    pts.extend((0..n).map(|i| e(n, i)));
                    pts.push(&e(n, 0) + &e(n, 1));
                }
                CanonicalFamily::QprimeN => {
                    pts.extend((0..n).map(|i| e(n, i)));
                    pts.push(&(&e(n, 0) + &e(n, 1)) - &e(n, n - 1));
                }
                CanonicalFamily::Dn => {
                    pts.push(e(n, 0));
                    pts.push(e(n, 1));
                    pts.push(&(&e(n, 0) + &e(n, 1)) + &scaled_unit(n, 2, 2));
                    pts.extend((3..n).map(|i| e(n, i)));
                }
                _ => unreachable!(),
            }
            LatticePolytope::hull(&pts, n)
        }
    }
}

/// `R_n(a)` without the rank threshold, so that `n = 2` (trapezoids) is
/// available for fan comparisons.
pub(crate) fn r_family(a: &[u64]) -> Result<LatticePolytope> {
    let n = a.len();
    if n < 2 || a.contains(&0) || a.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidParameters(format!(
            "R_n needs n >= 2 sorted positive parameters, got {a:?}"
        )));
    }
    let mut pts = vec![IntVector::zero(n)];
    for (i, &ai) in a.iter().enumerate().take(n - 1) {
        pts.push(e(n, i));
        pts.push(&e(n, i) + &scaled_unit(n, n - 1, ai));
    }
    pts.push(scaled_unit(n, n - 1, a[n - 1]));
    LatticePolytope::hull(&pts, n)
}

/// The only `R_n` parameters compatible with the edge lengths of `p`.
///
/// `R_n(a)` is a prism over `Δ_0^{n-1}`: its `n(n-1)` edges inside the two
/// simplex facets have length one and its `n` vertical edges have lengths
/// `a_1, ..., a_n`.
pub(crate) fn rn_parameters_from_edges(p: &LatticePolytope) -> Option<Vec<u64>> {
    let n = p.dim();
    if p.vertices().len() != 2 * n || p.edges().len() != n * (n - 1) + n {
        return None;
    }
    let mut lengths: Vec<u64> = p
        .edges()
        .iter()
        .map(|e| e.lattice_length.to_u64())
        .collect::<Option<_>>()?;
    lengths.sort_unstable();
    let ones = lengths.iter().filter(|&&l| l == 1).count();
    if ones < n * (n - 1) {
        return None;
    }
    Some(lengths.split_off(n * (n - 1)))
}

fn interior_count(p: &LatticePolytope, k: u64) -> Result<usize> {
    Ok(interior_lattice_points(&p.dilate(k)?).len())
}

fn require_rank(p: &LatticePolytope, min: usize) -> Result<usize> {
    p.require_full_dimensional()?;
    let n = p.dim();
    if n < min {
        return Err(Error::Precondition(format!("rank {n} is below the required {min}")));
    }
    Ok(n)
}

/// First candidate family (in the given order) whose model is lattice
/// equivalent to `p`.
fn search(p: &LatticePolytope, candidates: &[CanonicalFamily]) -> Result<Option<ClassificationVerdict>> {
    let n = p.dim();
    for family in candidates {
        let model = canonical_polytope(family, n)?;
        if let Some(witness) = lattice_equivalent(p, &model) {
            debug_assert!(witness_maps_onto(&witness, p, &model));
            return Ok(Some(ClassificationVerdict {
                family: family.clone(),
                witness: Some(witness),
            }));
        }
    }
    Ok(None)
}

/// `f` carries the vertex set of `p` exactly onto that of `q`.
pub fn witness_maps_onto(f: &AffineUnimodularMap, p: &LatticePolytope, q: &LatticePolytope) -> bool {
    let mut image: Vec<IntVector> = match p.vertices().iter().map(|v| f.apply(v)).collect() {
        Ok(v) => v,
        Err(_) => return false,
    };
    image.sort();
    image == q.vertices()
}

fn missed(what: &str, p: &LatticePolytope) -> Error {
    Error::CounterexampleCandidate(format!("no {what} witness found for {p}"))
}

/// `Int(nP) ∩ M = ∅` forces `P` to be a basic simplex.
pub fn classify_empty_interior(p: &LatticePolytope) -> Result<ClassificationVerdict> {
    let n = require_rank(p, 1)?;
    let count = interior_count(p, n as u64)?;
    if count != 0 {
        return Err(Error::Precondition(format!(
            "interior of nP nonempty ({count} lattice points)"
        )));
    }
    search(p, &[CanonicalFamily::BasicSimplex])?.ok_or_else(|| missed("basic simplex", p))
}

/// `♯Int(nP) ∩ M = 1` forces `P ≅ P_n` or `Q_n`.
pub fn classify_unique_interior(p: &LatticePolytope) -> Result<ClassificationVerdict> {
    let n = require_rank(p, 2)?;
    let count = interior_count(p, n as u64)?;
    if count != 1 {
        return Err(Error::Precondition(format!(
            "interior of nP has {count} lattice points, expected 1"
        )));
    }
    search(p, &[CanonicalFamily::Pn, CanonicalFamily::Qn])?.ok_or_else(|| missed("P_n or Q_n", p))
}

/// Gorenstein `P` with `Int((n-1)P) ∩ M = ∅ != Int(nP) ∩ M` is `P_n`, `Q_n`
/// or some `R_n`. `Q'_n` is reported as `Qn`.
pub fn classify_gorenstein_small_interior(p: &LatticePolytope) -> Result<ClassificationVerdict> {
    let n = require_rank(p, 3)?;
    let mut violations = Vec::new();
    if !is_gorenstein_polytope(p)? {
        violations.push("not Gorenstein".to_string());
    }
    let below = interior_count(p, n as u64 - 1)?;
    if below != 0 {
        violations.push(format!("interior of (n-1)P has {below} lattice points"));
    }
    if interior_count(p, n as u64)? == 0 {
        violations.push("interior of nP is empty".to_string());
    }
    if !violations.is_empty() {
        return Err(Error::Precondition(violations.join("; ")));
    }
    let mut candidates = vec![CanonicalFamily::Pn, CanonicalFamily::Qn];
    if let Some(a) = rn_parameters_from_edges(p) {
        candidates.push(CanonicalFamily::rn(a)?);
    }
    search(p, &candidates)?.ok_or_else(|| missed("P_n, Q_n or R_n", p))
}

/// Empty simplices: basic when `Int((n-1)P)` is empty, `D_n` when it holds a
/// single point (`n >= 3`), otherwise `Other`.
pub fn classify_empty_simplex(p: &LatticePolytope) -> Result<ClassificationVerdict> {
    let n = require_rank(p, 2)?;
    if !p.is_simplex() || lattice_points(p).len() != n + 1 {
        return Err(Error::Precondition("input is not an empty lattice simplex".into()));
    }
    let count = interior_count(p, n as u64 - 1)?;
    if count == 0 {
        return search(p, &[CanonicalFamily::BasicSimplex])?.ok_or_else(|| missed("basic simplex", p));
    }
    if count == 1 && n >= 3 {
        return search(p, &[CanonicalFamily::Dn])?.ok_or_else(|| missed("D_n", p));
    }
    Ok(ClassificationVerdict::other())
}

/// `Conv{0, e_1, e_2, e_1 + p e_2 + q e_3}`, the empty tetrahedra family.
pub fn empty_tetrahedron(p: i64, q: i64) -> Result<LatticePolytope> {
    LatticePolytope::from_i64_points(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, p, q]])
}

/// `Conv{0, e_1, ..., e_{n-1}, e_1 + e_2 + e_3 + 3 e_n}` for `n >= 4`.
pub fn non_gorenstein_example(n: usize) -> Result<LatticePolytope> {
    if n < 4 {
        return Err(Error::RankTooSmall {
            family: "non-Gorenstein example",
            min: 4,
            rank: n,
        });
    }
    let mut pts = vec![IntVector::zero(n)];
    pts.extend((0..n - 1).map(|i| e(n, i)));
    let mut apex = scaled_unit(n, n - 1, 3);
    for i in 0..3 {
        apex = &apex + &e(n, i);
    }
    pts.push(apex);
    LatticePolytope::hull(&pts, n)
}

/// `true` when `p` has exactly one lattice point in the interior of `kP`.
pub fn has_unique_interior_point(p: &LatticePolytope, k: u64) -> Result<bool> {
    Ok(interior_count(p, k)? == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice_algebra::IntMatrix;

    fn poly(points: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64_points(points).unwrap()
    }

    #[test]
    fn canonical_models() {
        assert_eq!(
            canonical_polytope(&CanonicalFamily::Pn, 2).unwrap(),
            poly(&[&[0, 0], &[2, 0], &[0, 1]])
        );
        assert_eq!(
            canonical_polytope(&CanonicalFamily::Qn, 2).unwrap(),
            poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
        );
        assert_eq!(
            canonical_polytope(&CanonicalFamily::Dn, 3).unwrap(),
            poly(&[&[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[1, 1, 2]])
        );
        assert!(matches!(
            canonical_polytope(&CanonicalFamily::Dn, 2),
            Err(Error::RankTooSmall { min: 3, .. })
        ));
        let r = canonical_polytope(&CanonicalFamily::rn(vec![2, 1, 3]).unwrap(), 3).unwrap();
        assert_eq!(r.vertices().len(), 6);
        assert_eq!(rn_parameters_from_edges(&r), Some(vec![1, 2, 3]));
        for n in 3..=5 {
            for f in [CanonicalFamily::Pn, CanonicalFamily::Qn, CanonicalFamily::QprimeN, CanonicalFamily::Dn] {
                let p = canonical_polytope(&f, n).unwrap();
                assert_eq!(LatticePolytope::hull(p.vertices(), n).unwrap(), p);
            }
        }
    }

    #[test]
    fn empty_interior() {
        let t = poly(&[&[0, 0], &[1, 0], &[1, 1]]);
        let v = classify_empty_interior(&t).unwrap();
        assert_eq!(v.family, CanonicalFamily::BasicSimplex);
        let model = canonical_polytope(&CanonicalFamily::BasicSimplex, 2).unwrap();
        assert!(witness_maps_onto(v.witness.as_ref().unwrap(), &t, &model));

        let d = canonical_polytope(&CanonicalFamily::BasicSimplex, 3).unwrap();
        let v = classify_empty_interior(&d).unwrap();
        assert_eq!(v.witness.unwrap().linear(), &IntMatrix::identity(3));

        let p2 = canonical_polytope(&CanonicalFamily::Pn, 2).unwrap();
        assert!(matches!(classify_empty_interior(&p2), Err(Error::Precondition(_))));
    }

    #[test]
    fn unique_interior() {
        let p2 = canonical_polytope(&CanonicalFamily::Pn, 2).unwrap();
        assert_eq!(classify_unique_interior(&p2).unwrap().family, CanonicalFamily::Pn);
        let q2 = canonical_polytope(&CanonicalFamily::Qn, 2).unwrap();
        assert_eq!(classify_unique_interior(&q2).unwrap().family, CanonicalFamily::Qn);
        let wide = poly(&[&[0, 0], &[3, 0], &[0, 1]]);
        match classify_unique_interior(&wide) {
            Err(Error::Precondition(m)) => assert!(m.contains("2 lattice points")),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn gorenstein_small_interior() {
        let r = canonical_polytope(&CanonicalFamily::rn(vec![1, 1, 1]).unwrap(), 3).unwrap();
        let v = classify_gorenstein_small_interior(&r).unwrap();
        assert_eq!(v.family, CanonicalFamily::Rn(vec![1, 1, 1]));
        let p3 = canonical_polytope(&CanonicalFamily::Pn, 3).unwrap();
        assert_eq!(classify_gorenstein_small_interior(&p3).unwrap().family, CanonicalFamily::Pn);
        let q3 = canonical_polytope(&CanonicalFamily::QprimeN, 3).unwrap();
        assert_eq!(classify_gorenstein_small_interior(&q3).unwrap().family, CanonicalFamily::Qn);
        let r = canonical_polytope(&CanonicalFamily::rn(vec![1, 2, 4]).unwrap(), 3).unwrap();
        assert_eq!(
            classify_gorenstein_small_interior(&r).unwrap().family,
            CanonicalFamily::Rn(vec![1, 2, 4])
        );
    }

    #[test]
    fn empty_simplices() {
        let d3 = canonical_polytope(&CanonicalFamily::Dn, 3).unwrap();
        assert_eq!(classify_empty_simplex(&d3).unwrap().family, CanonicalFamily::Dn);
        let t = empty_tetrahedron(1, 3).unwrap();
        let v = classify_empty_simplex(&t).unwrap();
        assert_eq!(v.family, CanonicalFamily::Other);
        assert!(v.witness.is_none());
        let b = canonical_polytope(&CanonicalFamily::BasicSimplex, 3).unwrap();
        assert_eq!(classify_empty_simplex(&b).unwrap().family, CanonicalFamily::BasicSimplex);
        let p2 = canonical_polytope(&CanonicalFamily::Pn, 2).unwrap();
        assert!(classify_empty_simplex(&p2).is_err());
    }

    #[test]
    fn family_display() {
        assert_eq!(CanonicalFamily::rn(vec![3, 1]).unwrap().to_string(), "Rn(1,3)");
        assert_eq!(CanonicalFamily::Qn.to_string(), "Qn");
    }
}
