//! Edge lengths as intersection numbers, the adjoint polytope, normal fans,
//! and certificates for nefness and very ampleness of `L + K_X`.
//!
//! For a Gorenstein polytope every vertex `v` has a lattice point `m_v` whose
//! pairing with each facet normal through `v` exceeds the facet's value by
//! one. The adjoint divisor is nef exactly when every `m_v` satisfies all
//! facet inequalities strictly.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use serde::Serialize;

use crate::classification::{canonical_polytope, r_family, CanonicalFamily};
use crate::cones::{
    generation_violator, gorenstein_point, is_gorenstein, local_edge_polytope, vertex_cone, EdgePoints, VeryAmpleAt,
};
use crate::error::{Error, Result};
use crate::lattice_algebra::{serialize_bigint, solve_integer_system, IntMatrix, IntVector};
use crate::points::{interior_lattice_points, lattice_points};
use crate::polytope::LatticePolytope;

/// Minimum lattice length over all edges.
pub fn min_edge_length(p: &LatticePolytope) -> Result<BigInt> {
    p.min_edge_length()
        .ok_or_else(|| Error::Precondition("a point has no edges".into()))
}

/// Hull of the interior lattice points; `None` when there are none.
pub fn adjoint_polytope(p: &LatticePolytope) -> Option<LatticePolytope> {
    let int = interior_lattice_points(p);
    if int.is_empty() {
        return None;
    }
    Some(LatticePolytope::hull(int.as_slice(), p.ambient_rank()).expect("nonempty"))
}

/// Maximal cones of the normal fan, one per vertex, as index sets into the
/// sorted list of rays (the inner facet normals).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalFan {
    pub rays: Vec<IntVector>,
    pub cones: Vec<Vec<usize>>,
}

impl NormalFan {
    pub fn rank(&self) -> usize {
        self.rays.first().map_or(0, IntVector::dim)
    }
}

pub fn normal_fan(p: &LatticePolytope) -> Result<NormalFan> {
    let mut rays: Vec<IntVector> = p.facets()?.iter().map(|f| f.normal.clone()).collect();
    rays.sort();
    let mut cones: Vec<Vec<usize>> = p
        .vertices()
        .iter()
        .map(|v| {
            let mut c: Vec<usize> = p
                .facets_through(v)
                .map(|f| rays.binary_search(&f.normal).expect("facet normal is a ray"))
                .collect();
            c.sort_unstable();
            c
        })
        .collect();
    cones.sort();
    Ok(NormalFan { rays, cones })
}

fn ray_degrees(f: &NormalFan) -> Vec<usize> {
    let mut deg = vec![0; f.rays.len()];
    for c in &f.cones {
        for &i in c {
            deg[i] += 1;
        }
    }
    deg
}

/// A linear unimodular map of the dual lattice carrying the rays and cones of
/// `f` onto those of `g`.
pub fn fan_equivalent(f: &NormalFan, g: &NormalFan) -> Option<IntMatrix> {
    let n = f.rank();
    if n != g.rank() || f.rays.len() != g.rays.len() || f.cones.len() != g.cones.len() {
        return None;
    }
    let mut sizes_f: Vec<usize> = f.cones.iter().map(Vec::len).collect();
    let mut sizes_g: Vec<usize> = g.cones.iter().map(Vec::len).collect();
    sizes_f.sort_unstable();
    sizes_g.sort_unstable();
    if sizes_f != sizes_g {
        return None;
    }
    let deg_f = ray_degrees(f);
    let deg_g = ray_degrees(g);
    let mut sorted_f = deg_f.clone();
    let mut sorted_g = deg_g.clone();
    sorted_f.sort_unstable();
    sorted_g.sort_unstable();
    if sorted_f != sorted_g {
        return None;
    }

    // n independent rays of f, taken from one maximal cone when possible
    let mut basis: Vec<usize> = Vec::new();
    let order: Vec<usize> = f.cones[0]
        .iter()
        .copied()
        .chain(0..f.rays.len())
        .collect();
    for i in order {
        if basis.contains(&i) {
            continue;
        }
        basis.push(i);
        let rows: Vec<IntVector> = basis.iter().map(|&j| f.rays[j].clone()).collect();
        if IntMatrix::from_rows(&rows).ok()?.rank() < basis.len() {
            basis.pop();
        }
        if basis.len() == n {
            break;
        }
    }
    if basis.len() != n {
        return None;
    }
    let cols: Vec<IntVector> = basis.iter().map(|&j| f.rays[j].clone()).collect();
    let mf = IntMatrix::from_columns(&cols).ok()?;
    let det = mf.determinant().ok()?;
    let adj = mf.adjugate().ok()?;
    let cones_g: BTreeSet<&Vec<usize>> = g.cones.iter().collect();

    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut check = |targets: &[usize]| -> Option<IntMatrix> {
        let cols: Vec<IntVector> = targets.iter().map(|&t| g.rays[t].clone()).collect();
        let num = IntMatrix::from_columns(&cols).ok()?.mul(&adj).ok()?;
        if num.entries().iter().any(|x| x % &det != BigInt::from(0)) {
            return None;
        }
        let l = IntMatrix::new(n, n, num.entries().iter().map(|x| x / &det).collect()).ok()?;
        if !l.is_unimodular() {
            return None;
        }
        let image: Vec<usize> = f
            .rays
            .iter()
            .map(|r| l.mul_vec(r).ok().and_then(|x| g.rays.binary_search(&x).ok()))
            .collect::<Option<_>>()?;
        for c in &f.cones {
            let mut mapped: Vec<usize> = c.iter().map(|&i| image[i]).collect();
            mapped.sort_unstable();
            if !cones_g.contains(&mapped) {
                return None;
            }
        }
        Some(l)
    };
    assign_rays(&basis, &deg_f, &deg_g, &mut chosen, &mut check)
}

fn assign_rays<F>(basis: &[usize], deg_f: &[usize], deg_g: &[usize], chosen: &mut Vec<usize>, check: &mut F) -> Option<IntMatrix>
where
    F: FnMut(&[usize]) -> Option<IntMatrix>,
{
    if chosen.len() == basis.len() {
        return check(chosen);
    }
    let want = deg_f[basis[chosen.len()]];
    for t in 0..deg_g.len() {
        if deg_g[t] != want || chosen.contains(&t) {
            continue;
        }
        chosen.push(t);
        if let Some(l) = assign_rays(basis, deg_f, deg_g, chosen, check) {
            return Some(l);
        }
        chosen.pop();
    }
    None
}

/// The exceptional varieties excluded from the freeness statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FanException {
    ProjectiveSpace,
    /// A `P^{n-1}`-bundle over `P^1`, i.e. the fan of some `R_n(a)`.
    BundleOverP1 { params: Vec<u64> },
    /// Gorenstein toric Fano of index `n`: the fan of `P_n` or `Q_n`.
    IndexNFano { family: CanonicalFamily },
}

impl FanException {
    pub fn label(&self) -> &'static str {
        match self {
            FanException::ProjectiveSpace => "projective space",
            FanException::BundleOverP1 { .. } => "bundle over P1",
            FanException::IndexNFano { .. } => "index-n Fano",
        }
    }
}

pub fn is_projective_space_fan(fan: &NormalFan) -> Result<bool> {
    let n = fan.rank();
    let simplex = canonical_polytope(&CanonicalFamily::BasicSimplex, n)?;
    Ok(fan_equivalent(fan, &normal_fan(&simplex)?).is_some())
}

/// Which exception, if any, the fan of `p` belongs to.
pub fn detect_exception(p: &LatticePolytope) -> Result<Option<FanException>> {
    let fan = normal_fan(p)?;
    let n = p.dim();
    if is_projective_space_fan(&fan)? {
        return Ok(Some(FanException::ProjectiveSpace));
    }
    for family in [CanonicalFamily::Pn, CanonicalFamily::Qn] {
        let model = canonical_polytope(&family, n)?;
        if fan_equivalent(&fan, &normal_fan(&model)?).is_some() {
            return Ok(Some(FanException::IndexNFano { family }));
        }
    }
    Ok(bundle_parameters(&fan)?.map(|params| FanException::BundleOverP1 { params }))
}

/// Parameters `a` with the fan of `R_n(a)` equal to `fan` up to unimodular
/// maps.
///
/// The fan of `R_n(a)` has two base rays `s, s'` and `n` fiber rays summing
/// to zero, with `s + s'` in the fiber span; its coordinates there recover
/// the differences `a_n - a_i`. Every candidate is confirmed by an explicit
/// fan equivalence.
fn bundle_parameters(fan: &NormalFan) -> Result<Option<Vec<u64>>> {
    let n = fan.rank();
    if fan.rays.len() != n + 2 || n < 2 {
        return Ok(None);
    }
    for i in 0..fan.rays.len() {
        for j in i + 1..fan.rays.len() {
            let fiber: Vec<&IntVector> = (0..fan.rays.len())
                .filter(|&k| k != i && k != j)
                .map(|k| &fan.rays[k])
                .collect();
            let sum = fiber.iter().fold(IntVector::zero(n), |acc, r| &acc + *r);
            if !sum.is_zero() {
                continue;
            }
            let cols: Vec<IntVector> = fiber[..n - 1].iter().map(|r| (*r).clone()).collect();
            let m = IntMatrix::from_columns(&cols)?;
            if m.rank() != n - 1 {
                continue;
            }
            let target = &fan.rays[i] + &fan.rays[j];
            let Some(sol) = solve_integer_system(&m, &target)? else {
                continue;
            };
            let mut c: Vec<i64> = match sol.point.to_i64s() {
                Some(c) => c,
                None => continue,
            };
            c.push(0);
            let lo = *c.iter().min().expect("nonempty");
            let hi = *c.iter().max().expect("nonempty");
            for b in [
                c.iter().map(|x| x - lo).collect::<Vec<i64>>(),
                c.iter().map(|x| hi - x).collect(),
            ] {
                let top = b.iter().max().copied().unwrap_or(0) + 1;
                let mut a: Vec<u64> = b.iter().map(|bi| (top - bi) as u64).collect();
                a.sort_unstable();
                let model = r_family(&a)?;
                if fan_equivalent(fan, &normal_fan(&model)?).is_some() {
                    return Ok(Some(a));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRecord {
    pub vertex: IntVector,
    /// `v + m_0` in absolute coordinates.
    pub m_v: Option<IntVector>,
    pub m_v_interior: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointReport {
    pub vertices: Vec<VertexRecord>,
    pub gorenstein: bool,
    #[serde(serialize_with = "serialize_bigint")]
    pub min_edge_length: BigInt,
    pub sections_nonzero: bool,
    pub nef_certified: bool,
    pub very_ample_certified: Option<bool>,
    /// Gorenstein, `Int P ∩ M` nonempty and every edge of length `>= n - 1`.
    pub hypotheses_hold: bool,
    pub counterexample_candidate: bool,
}

/// Evaluates the freeness hypotheses and, independently, the nef conclusion.
pub fn freeness_check(p: &LatticePolytope) -> Result<AdjointReport> {
    p.require_full_dimensional()?;
    let n = p.dim();
    let data = is_gorenstein(p)?;
    let vertices: Vec<VertexRecord> = data
        .iter()
        .map(|(v, d)| {
            let m_v = d.as_ref().map(|d| v + &d.point);
            let m_v_interior = m_v.as_ref().is_some_and(|m| p.contains_in_interior(m));
            VertexRecord {
                vertex: v.clone(),
                m_v,
                m_v_interior,
            }
        })
        .collect();
    let gorenstein = vertices.iter().all(|r| r.m_v.is_some());
    let all_interior = vertices.iter().all(|r| r.m_v_interior);
    let min_edge = min_edge_length(p)?;
    let sections_nonzero = !interior_lattice_points(p).is_empty();
    let hypotheses_hold = gorenstein && sections_nonzero && min_edge >= BigInt::from(n as u64 - 1);
    Ok(AdjointReport {
        vertices,
        gorenstein,
        min_edge_length: min_edge,
        sections_nonzero,
        nef_certified: gorenstein && sections_nonzero && all_interior,
        very_ample_certified: None,
        hypotheses_hold,
        counterexample_candidate: hypotheses_hold && !all_interior,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FreenessTheoremReport {
    pub report: AdjointReport,
    pub exception: Option<FanException>,
    /// Not exceptional and every edge of length `>= n - 1`.
    pub hypotheses_hold: bool,
    /// Every `m_v` lies in the interior, i.e. `L + K_X` is nef.
    pub nef: bool,
    pub counterexample_candidate: bool,
}

/// The freeness theorem for a Gorenstein polytope: outside the exceptional
/// fans, edges of length `>= n - 1` force `L + K_X` to be nef.
pub fn theorem_tm1_check(p: &LatticePolytope) -> Result<FreenessTheoremReport> {
    let report = freeness_check(p)?;
    if !report.gorenstein {
        return Err(Error::Precondition("polytope is not Gorenstein".into()));
    }
    let n = p.dim();
    let exception = detect_exception(p)?;
    let nef = report.vertices.iter().all(|r| r.m_v_interior);
    let hypotheses_hold = exception.is_none() && report.min_edge_length >= BigInt::from(n as u64 - 1);
    Ok(FreenessTheoremReport {
        counterexample_candidate: hypotheses_hold && !nef,
        report,
        exception,
        hypotheses_hold,
        nef,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjointVeryAmple {
    pub ok: bool,
    /// Per vertex of `P`: does `(Int P ∩ M) - m_v` generate `C_v(P) ∩ M`?
    pub vertices: Vec<VeryAmpleAt>,
}

/// Very ampleness of `L + K_X`, chart by chart on the fan of `P`.
pub fn adjoint_very_ample(p: &LatticePolytope) -> Result<AdjointVeryAmple> {
    p.require_full_dimensional()?;
    let Some(adj) = adjoint_polytope(p) else {
        return Err(Error::Precondition("polytope has no interior lattice points".into()));
    };
    if !adj.is_full_dimensional() || normal_fan(&adj)? != normal_fan(p)? {
        return Err(Error::Precondition(
            "adjoint polytope does not have the normal fan of P".into(),
        ));
    }
    let interior = interior_lattice_points(p);
    let mut vertices = Vec::new();
    for v in p.vertices() {
        let cone = vertex_cone(p, v)?;
        let m0 = gorenstein_point(&cone)
            .ok_or_else(|| Error::Precondition(format!("not Gorenstein at {v}")))?
            .point;
        let m_v = v + &m0;
        let violator = generation_violator(&cone, interior.iter().map(|x| x - &m_v))?;
        vertices.push(VeryAmpleAt {
            vertex: v.clone(),
            ok: violator.is_none(),
            violator,
        });
    }
    Ok(AdjointVeryAmple {
        ok: vertices.iter().all(|r| r.ok),
        vertices,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeryAmplenessTheoremReport {
    #[serde(serialize_with = "serialize_bigint")]
    pub min_edge_length: BigInt,
    pub projective_space: bool,
    /// Every edge of length `>= n + 1` and the fan is not that of `P^n`.
    pub hypotheses_hold: bool,
    pub very_ample: bool,
    /// Set when the adjoint precondition failed, explaining `very_ample = false`.
    pub precondition_failure: Option<String>,
    pub vertices: Vec<VeryAmpleAt>,
    pub counterexample_candidate: bool,
}

pub fn theorem_tm2_check(p: &LatticePolytope) -> Result<VeryAmplenessTheoremReport> {
    p.require_full_dimensional()?;
    if is_gorenstein(p)?.values().any(Option::is_none) {
        return Err(Error::Precondition("polytope is not Gorenstein".into()));
    }
    let n = p.dim();
    let min_edge = min_edge_length(p)?;
    let projective_space = is_projective_space_fan(&normal_fan(p)?)?;
    let hypotheses_hold = !projective_space && min_edge >= BigInt::from(n as u64 + 1);
    let (very_ample, precondition_failure, vertices) = match adjoint_very_ample(p) {
        Ok(r) => (r.ok, None, r.vertices),
        Err(Error::Precondition(m)) => (false, Some(m), Vec::new()),
        Err(e) => return Err(e),
    };
    Ok(VeryAmplenessTheoremReport {
        min_edge_length: min_edge,
        projective_space,
        hypotheses_hold,
        very_ample,
        precondition_failure,
        vertices,
        counterexample_candidate: hypotheses_hold && !very_ample,
    })
}

/// The local certificate at one vertex: `Q` is spanned by the nearest
/// lattice points on the edges, `r` is the least dilation with interior
/// lattice points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalCertificate {
    pub vertex: IntVector,
    /// Absent when `Q` is basic.
    pub r: Option<u64>,
    /// `m_v ∈ Int(rQ)`.
    pub m_v_in_rq: Option<bool>,
    /// `m_v + ((n+1-r)Q ∩ M) ⊆ Int((n+1)Q)`.
    pub inclusion_holds: Option<bool>,
}

pub fn local_certificates(p: &LatticePolytope) -> Result<Vec<LocalCertificate>> {
    let n = p.dim() as u64;
    let mut out = Vec::new();
    for v in p.vertices() {
        let cone = vertex_cone(p, v)?;
        let m0 = gorenstein_point(&cone)
            .ok_or_else(|| Error::Precondition(format!("not Gorenstein at {v}")))?
            .point;
        let q = local_edge_polytope(p, v, EdgePoints::Nearest)?;
        let mut cert = LocalCertificate {
            vertex: v.clone(),
            r: None,
            m_v_in_rq: None,
            inclusion_holds: None,
        };
        for r in 1..=n {
            let rq = q.dilate(r)?;
            if interior_lattice_points(&rq).is_empty() {
                continue;
            }
            cert.r = Some(r);
            cert.m_v_in_rq = Some(rq.contains_in_interior(&m0));
            let big = q.dilate(n + 1)?;
            cert.inclusion_holds = Some(
                lattice_points(&q.dilate(n + 1 - r)?)
                    .iter()
                    .all(|x| big.contains_in_interior(&(&m0 + x))),
            );
            break;
        }
        out.push(cert);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(points: &[&[i64]]) -> LatticePolytope {
        LatticePolytope::from_i64_points(points).unwrap()
    }

    fn model(f: CanonicalFamily, n: usize) -> LatticePolytope {
        canonical_polytope(&f, n).unwrap()
    }

    #[test]
    fn edge_lengths_and_adjoint() {
        assert_eq!(min_edge_length(&model(CanonicalFamily::Pn, 2)).unwrap(), BigInt::from(1));
        let d2 = model(CanonicalFamily::BasicSimplex, 2);
        assert_eq!(min_edge_length(&d2.dilate(3).unwrap()).unwrap(), BigInt::from(3));
        let d3 = model(CanonicalFamily::Dn, 3);
        assert_eq!(min_edge_length(&d3.dilate(3).unwrap()).unwrap(), BigInt::from(3));
        let a = adjoint_polytope(&d2.dilate(3).unwrap()).unwrap();
        assert_eq!(a.vertices(), &[IntVector::from([1, 1])]);
        assert!(adjoint_polytope(&d2.dilate(2).unwrap()).is_none());
        let a = adjoint_polytope(&d3.dilate(3).unwrap()).unwrap();
        assert_eq!(a, d3.translate(&IntVector::from([1, 1, 1])).unwrap());
    }

    #[test]
    fn fans() {
        let d2 = model(CanonicalFamily::BasicSimplex, 2);
        let f = normal_fan(&d2).unwrap();
        assert_eq!(fan_equivalent(&f, &normal_fan(&d2.dilate(2).unwrap()).unwrap()), Some(IntMatrix::identity(2)));
        let q2 = model(CanonicalFamily::Qn, 2);
        assert!(fan_equivalent(&f, &normal_fan(&q2).unwrap()).is_none());
        let p2 = model(CanonicalFamily::Pn, 2);
        assert!(fan_equivalent(&normal_fan(&p2).unwrap(), &normal_fan(&q2).unwrap()).is_none());
        // shear of a polytope moves its fan by the inverse transpose
        let t = poly(&[&[0, 0], &[1, 0], &[1, 1]]);
        assert!(fan_equivalent(&f, &normal_fan(&t).unwrap()).is_some());
    }

    #[test]
    fn exceptions() {
        let d3 = model(CanonicalFamily::BasicSimplex, 3);
        for k in 1..=3 {
            assert_eq!(
                detect_exception(&d3.dilate(k).unwrap()).unwrap(),
                Some(FanException::ProjectiveSpace)
            );
        }
        let r = model(CanonicalFamily::rn(vec![1, 1, 1]).unwrap(), 3);
        assert_eq!(
            detect_exception(&r.dilate(2).unwrap()).unwrap(),
            Some(FanException::BundleOverP1 { params: vec![1, 1, 1] })
        );
        let r = model(CanonicalFamily::rn(vec![1, 2, 4]).unwrap(), 3);
        let found = detect_exception(&r).unwrap();
        assert!(matches!(found, Some(FanException::BundleOverP1 { .. })));
        let hexagon = poly(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]);
        assert_eq!(detect_exception(&hexagon).unwrap(), None);
        let q2 = model(CanonicalFamily::Qn, 2);
        assert!(matches!(
            detect_exception(&q2).unwrap(),
            Some(FanException::IndexNFano { family: CanonicalFamily::Qn })
        ));
    }

    #[test]
    fn freeness() {
        let q2 = model(CanonicalFamily::Qn, 2);
        let r = freeness_check(&q2.dilate(2).unwrap()).unwrap();
        assert!(r.hypotheses_hold && r.nef_certified && !r.counterexample_candidate);
        let m: Vec<IntVector> = r.vertices.iter().map(|x| x.m_v.clone().unwrap()).collect();
        assert!(m.iter().all(|x| x == &IntVector::from([1, 1])));

        let qp = model(CanonicalFamily::QprimeN, 3);
        let r = freeness_check(&qp).unwrap();
        assert_eq!(r.min_edge_length, BigInt::from(1));
        assert!(!r.hypotheses_hold);

        let d = model(CanonicalFamily::BasicSimplex, 3).dilate(2).unwrap();
        let r = freeness_check(&d).unwrap();
        assert!(!r.sections_nonzero && !r.hypotheses_hold);
    }

    #[test]
    fn freeness_theorem() {
        let q2 = model(CanonicalFamily::Qn, 2).dilate(2).unwrap();
        let r = theorem_tm1_check(&q2).unwrap();
        assert!(r.report.nef_certified);
        let hexagon = poly(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]]);
        let r = theorem_tm1_check(&hexagon).unwrap();
        assert!(r.hypotheses_hold && r.nef && !r.counterexample_candidate);
        let d3 = model(CanonicalFamily::Dn, 3);
        assert!(theorem_tm1_check(&poly(&[&[0, 0], &[1, 0], &[0, 3]])).is_err());
        assert!(theorem_tm1_check(&d3.dilate(2).unwrap()).unwrap().nef);
    }

    #[test]
    fn adjoint_very_ampleness() {
        let q2 = model(CanonicalFamily::Qn, 2);
        assert!(adjoint_very_ample(&q2.dilate(3).unwrap()).unwrap().ok);
        let d3 = model(CanonicalFamily::Dn, 3);
        let r = adjoint_very_ample(&d3.dilate(3).unwrap()).unwrap();
        assert!(!r.ok);
        let bad: Vec<&VeryAmpleAt> = r.vertices.iter().filter(|x| !x.ok).collect();
        assert!(!bad.is_empty());
        assert!(adjoint_very_ample(&d3.dilate(4).unwrap()).unwrap().ok);
        assert!(adjoint_very_ample(&q2).is_err());
    }

    #[test]
    fn very_ampleness_theorem() {
        let q2 = model(CanonicalFamily::Qn, 2).dilate(3).unwrap();
        let r = theorem_tm2_check(&q2).unwrap();
        assert!(r.hypotheses_hold && r.very_ample);
        let d3 = model(CanonicalFamily::Dn, 3).dilate(3).unwrap();
        let r = theorem_tm2_check(&d3).unwrap();
        assert!(!r.hypotheses_hold && !r.very_ample && !r.counterexample_candidate);
        let s = model(CanonicalFamily::BasicSimplex, 3).dilate(4).unwrap();
        let r = theorem_tm2_check(&s).unwrap();
        assert!(r.projective_space && !r.hypotheses_hold);
    }

    #[test]
    fn local_certificate_reproduction() {
        let p = model(CanonicalFamily::Qn, 3).dilate(4).unwrap();
        let certs = local_certificates(&p).unwrap();
        assert!(certs.iter().any(|c| c.r.is_some()));
        for c in certs {
            if c.r.is_some() {
                assert_eq!((c.m_v_in_rq, c.inclusion_holds), (Some(true), Some(true)), "{c:?}");
            } else {
                assert_eq!(c.m_v_in_rq, None);
            }
        }
    }
}
