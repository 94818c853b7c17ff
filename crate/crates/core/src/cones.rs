//! Tangent cones at vertices, the Gorenstein condition, Hilbert bases and
//! very ampleness at a vertex.

use std::collections::{BTreeMap, HashMap};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice_algebra::{
    floor_div, primitive, smith_normal_form, solve_all_ones_system, unimodular_inverse, IntMatrix, IntVector,
};
use crate::points::{interior_lattice_points, lattice_points, PointSet};
use crate::polytope::LatticePolytope;

/// Upper bound on the number of parallelepiped points a Hilbert basis
/// computation may visit.
pub const HILBERT_POINT_GUARD: u64 = 200_000;

/// Cone of directions `R_{>=0}(P - v)` at a vertex, stored with its apex.
///
/// `rays` and `cone_facets` are sorted and primitive; a point `x` of the
/// translated cone satisfies `<u, x> >= 0` for every facet normal `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCone {
    pub apex: IntVector,
    pub rays: Vec<IntVector>,
    pub cone_facets: Vec<IntVector>,
}

impl VertexCone {
    /// The cone generated by `generators` with apex at the origin.
    ///
    /// Fails unless the cone is full-dimensional and strictly convex.
    pub fn generated_by(generators: &[IntVector]) -> Result<VertexCone> {
        let n = generators.first().ok_or(Error::EmptyInput)?.dim();
        let mut pts = vec![IntVector::zero(n)];
        pts.extend(generators.iter().cloned());
        let q = LatticePolytope::hull(&pts, n)?;
        q.require_full_dimensional()?;
        let origin = IntVector::zero(n);
        if !q.is_vertex(&origin) {
            return Err(Error::Precondition("cone is not strictly convex".into()));
        }
        vertex_cone(&q, &origin)
    }

    pub fn rank(&self) -> usize {
        self.apex.dim()
    }

    /// `x` taken relative to the apex lies in the cone.
    pub fn contains(&self, x: &IntVector) -> bool {
        self.cone_facets.iter().all(|u| !u.dot(x).is_negative())
    }

    pub fn contains_in_interior(&self, x: &IntVector) -> bool {
        self.cone_facets.iter().all(|u| u.dot(x).is_positive())
    }

    /// Sum of the facet normals: positive on every nonzero cone element.
    pub fn grading(&self) -> IntVector {
        self.cone_facets
            .iter()
            .fold(IntVector::zero(self.rank()), |acc, u| &acc + u)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GorensteinDatum {
    /// The point `m_0` with `<u, m_0> = 1` for every cone facet `u`, taken
    /// relative to the apex.
    pub point: IntVector,
}

pub fn vertex_cone(p: &LatticePolytope, v: &IntVector) -> Result<VertexCone> {
    p.require_full_dimensional()?;
    if !p.is_vertex(v) {
        return Err(Error::NotAVertex(v.to_string()));
    }
    let mut rays: Vec<IntVector> = p
        .edges_at(v)
        .map(|e| primitive(&(e.other_endpoint(v).expect("edge at v") - v)).expect("distinct endpoints"))
        .collect();
    rays.sort();
    let mut cone_facets: Vec<IntVector> = p.facets_through(v).map(|f| f.normal.clone()).collect();
    cone_facets.sort();
    Ok(VertexCone {
        apex: v.clone(),
        rays,
        cone_facets,
    })
}

pub fn gorenstein_point(c: &VertexCone) -> Option<GorensteinDatum> {
    let sol = solve_all_ones_system(&c.cone_facets).ok()??;
    debug_assert!(sol.unique, "facet normals of a strictly convex cone span the dual");
    Some(GorensteinDatum { point: sol.point })
}

/// The Gorenstein datum at each vertex (absent where the cone fails).
pub fn is_gorenstein(p: &LatticePolytope) -> Result<BTreeMap<IntVector, Option<GorensteinDatum>>> {
    p.require_full_dimensional()?;
    p.vertices()
        .iter()
        .map(|v| Ok((v.clone(), gorenstein_point(&vertex_cone(p, v)?))))
        .collect()
}

/// `true` when the polytope is Gorenstein at every vertex.
pub fn is_gorenstein_polytope(p: &LatticePolytope) -> Result<bool> {
    Ok(is_gorenstein(p)?.values().all(Option::is_some))
}

/// Minimal generating set of the semigroup `C ∩ M` (relative to the apex).
///
/// Every point of `C ∩ M` is a nonnegative combination of rays plus a point
/// of a half-open parallelepiped spanned by `n` independent rays, so the
/// irreducible elements are found among those parallelepiped points.
pub fn hilbert_basis(c: &VertexCone) -> Result<PointSet> {
    let n = c.rank();
    let mut candidates: Vec<IntVector> = c.rays.clone();
    let mut budget = HILBERT_POINT_GUARD;
    for subset in c.rays.iter().combinations(n) {
        let cols: Vec<IntVector> = subset.into_iter().cloned().collect();
        let m = IntMatrix::from_columns(&cols)?;
        let det = m.determinant()?;
        if det.is_zero() {
            continue;
        }
        let size = det.abs().to_u64().unwrap_or(u64::MAX);
        if size > budget {
            return Err(Error::ResourceGuard(format!(
                "Hilbert basis enumeration exceeds {HILBERT_POINT_GUARD} parallelepiped points"
            )));
        }
        budget -= size;
        candidates.extend(parallelepiped_points(&m, &det)?);
    }
    candidates.sort();
    candidates.dedup();
    let basis: Vec<IntVector> = candidates
        .iter()
        .filter(|x| {
            !candidates
                .iter()
                .any(|y| y != *x && c.contains(&(*x - y)))
        })
        .cloned()
        .collect();
    Ok(PointSet::new(basis))
}

/// Nonzero lattice points `sum λ_i m_i` with `0 <= λ_i < 1`, where the
/// `m_i` are the columns of `m`.
fn parallelepiped_points(m: &IntMatrix, det: &BigInt) -> Result<Vec<IntVector>> {
    let n = m.rows();
    let (d, u, _) = smith_normal_form(m);
    let u_inv = unimodular_inverse(&u)?;
    let adj = m.adjugate()?;
    let (adj, det) = if det.is_negative() {
        let neg: Vec<BigInt> = adj.entries().iter().map(|x| -x).collect();
        (IntMatrix::new(n, n, neg)?, -det)
    } else {
        (adj, det.clone())
    };
    let moduli: Vec<BigInt> = (0..n).map(|i| d.get(i, i).abs()).collect();
    let mut out = Vec::new();
    let mut y = vec![BigInt::zero(); n];
    loop {
        if y.iter().any(|c| !c.is_zero()) {
            let x = u_inv.mul_vec(&IntVector::new(y.clone()))?;
            let lambda = adj.mul_vec(&x)?;
            let shift = IntVector::new(lambda.coords().iter().map(|l| floor_div(l, &det)).collect());
            out.push(&x - &m.mul_vec(&shift)?);
        }
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            y[i] += 1;
            if y[i] < moduli[i] {
                break;
            }
            y[i] = BigInt::zero();
        }
    }
}

/// Decides membership of cone points in the semigroup generated by a fixed
/// set of cone points, memoizing across queries.
pub struct SemigroupOracle<'a> {
    cone: &'a VertexCone,
    generators: Vec<IntVector>,
    memo: HashMap<IntVector, bool>,
}

impl<'a> SemigroupOracle<'a> {
    /// Zero and points outside the cone are dropped from `generators`.
    pub fn new(cone: &'a VertexCone, generators: impl IntoIterator<Item = IntVector>) -> Self {
        let grading = cone.grading();
        let mut generators: Vec<IntVector> = generators
            .into_iter()
            .filter(|g| !g.is_zero() && cone.contains(g))
            .collect();
        generators.sort_by(|a, b| grading.dot(b).cmp(&grading.dot(a)).then(a.cmp(b)));
        generators.dedup();
        SemigroupOracle {
            cone,
            generators,
            memo: HashMap::new(),
        }
    }

    pub fn contains(&mut self, x: &IntVector) -> bool {
        if x.is_zero() {
            return true;
        }
        if !self.cone.contains(x) {
            return false;
        }
        if let Some(&known) = self.memo.get(x) {
            return known;
        }
        let mut found = false;
        for i in 0..self.generators.len() {
            let rest = x - &self.generators[i];
            if self.cone.contains(&rest) && self.contains(&rest) {
                found = true;
                break;
            }
        }
        self.memo.insert(x.clone(), found);
        found
    }
}

/// First Hilbert-basis element of `c` outside the semigroup generated by
/// `generators`, or `None` when they generate `c ∩ M`.
pub fn generation_violator(c: &VertexCone, generators: impl IntoIterator<Item = IntVector>) -> Result<Option<IntVector>> {
    let basis = hilbert_basis(c)?;
    let mut oracle = SemigroupOracle::new(c, generators);
    Ok(basis.iter().find(|h| !oracle.contains(h)).cloned())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VeryAmpleAt {
    pub vertex: IntVector,
    pub ok: bool,
    /// A Hilbert-basis element of the vertex cone not generated by `(P - v) ∩ M`.
    pub violator: Option<IntVector>,
}

pub fn very_ample_at(p: &LatticePolytope, v: &IntVector) -> Result<VeryAmpleAt> {
    let cone = vertex_cone(p, v)?;
    let shifted = lattice_points(p).into_vec().into_iter().map(|x| &x - v);
    let violator = generation_violator(&cone, shifted)?;
    Ok(VeryAmpleAt {
        vertex: v.clone(),
        ok: violator.is_none(),
        violator,
    })
}

pub fn is_very_ample(p: &LatticePolytope) -> Result<bool> {
    for v in p.vertices() {
        if !very_ample_at(p, v)?.ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Which lattice points of the edges at a vertex span a local polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgePoints {
    /// The far endpoints of the edges.
    Endpoints,
    /// The first lattice point after the vertex on each edge.
    Nearest,
}

/// `Conv{0, m_1, ..., m_t}` with the `m_i` taken on the edges at `v`,
/// translated so that `v` sits at the origin.
pub fn local_edge_polytope(p: &LatticePolytope, v: &IntVector, kind: EdgePoints) -> Result<LatticePolytope> {
    let cone = vertex_cone(p, v)?;
    let n = p.ambient_rank();
    let mut pts = vec![IntVector::zero(n)];
    match kind {
        EdgePoints::Nearest => pts.extend(cone.rays.iter().cloned()),
        EdgePoints::Endpoints => pts.extend(p.edges_at(v).map(|e| e.other_endpoint(v).expect("edge at v") - v)),
    }
    LatticePolytope::hull(&pts, n)
}

/// Whether `Int(rQ)` has lattice points and whether the Gorenstein point
/// lies in it, for one dilation factor `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalDilateCheck {
    pub r: u64,
    pub interior_nonempty: bool,
    pub m0_interior: bool,
}

/// For `Q` spanned by the far edge endpoints at `v` and `r = 1..=n`: the
/// Gorenstein point of `C_v(P)` lies in `Int(rQ)` whenever that interior
/// contains lattice points.
pub fn gorenstein_point_in_local_dilates(p: &LatticePolytope, v: &IntVector) -> Result<Vec<LocalDilateCheck>> {
    let cone = vertex_cone(p, v)?;
    let m0 = gorenstein_point(&cone)
        .ok_or_else(|| Error::Precondition(format!("not Gorenstein at {v}")))?
        .point;
    let q = local_edge_polytope(p, v, EdgePoints::Endpoints)?;
    (1..=p.dim() as u64)
        .map(|r| {
            let rq = q.dilate(r)?;
            Ok(LocalDilateCheck {
                r,
                interior_nonempty: !interior_lattice_points(&rq).is_empty(),
                m0_interior: rq.contains_in_interior(&m0),
            })
        })
        .collect()
}
