//! The lattice polytope data model.
//!
//! A [`LatticePolytope`] stores its vertex set in lexicographic order together
//! with an irredundant facet description when it is full-dimensional.
//! Lower-dimensional polytopes are handled through an [`AffineFrame`], a
//! unimodular change of coordinates that identifies the affine span with
//! `Z^dim`; "relative interior" everywhere in the crate means interior in that
//! restricted model.

mod equivalence;
mod hull;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice_algebra::{smith_normal_form, unimodular_inverse, IntMatrix, IntVector};

pub use equivalence::{lattice_equivalent, Fingerprint};

/// Facet inequality `<normal, x> + offset >= 0` with a primitive inner normal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Facet {
    pub normal: IntVector,
    pub offset: BigInt,
}

impl Facet {
    pub fn new(normal: IntVector, offset: BigInt) -> Self {
        Facet { normal, offset }
    }

    pub fn evaluate(&self, x: &IntVector) -> BigInt {
        self.normal.dot(x) + &self.offset
    }

    pub(crate) fn flipped(&self) -> Facet {
        Facet {
            normal: -&self.normal,
            offset: -&self.offset,
        }
    }
}

/// A 1-face with its lattice length (gcd of the coordinate differences).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub endpoints: (IntVector, IntVector),
    pub lattice_length: BigInt,
}

impl Edge {
    fn new(a: IntVector, b: IntVector) -> Self {
        let lattice_length = (&b - &a).content();
        let endpoints = if a <= b { (a, b) } else { (b, a) };
        Edge {
            endpoints,
            lattice_length,
        }
    }

    pub fn has_endpoint(&self, v: &IntVector) -> bool {
        &self.endpoints.0 == v || &self.endpoints.1 == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other_endpoint(&self, v: &IntVector) -> Option<&IntVector> {
        if &self.endpoints.0 == v {
            Some(&self.endpoints.1)
        } else if &self.endpoints.1 == v {
            Some(&self.endpoints.0)
        } else {
            None
        }
    }
}

/// Unimodular coordinates on the affine span of a point set.
///
/// `to_model * (x - origin)` has zeros in every coordinate past `dim` exactly
/// when `x` lies in the affine span; the first `dim` coordinates are then the
/// coordinates of `x` in the saturated span lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFrame {
    origin: IntVector,
    dim: usize,
    to_model: IntMatrix,
    from_model: IntMatrix,
}

impl AffineFrame {
    pub fn of_points(points: &[IntVector]) -> Result<AffineFrame> {
        let origin = points.first().ok_or(Error::EmptyInput)?.clone();
        let n = origin.dim();
        let diffs: Vec<IntVector> = points[1..].iter().map(|p| p - &origin).collect();
        if diffs.iter().all(IntVector::is_zero) {
            return Ok(AffineFrame {
                origin,
                dim: 0,
                to_model: IntMatrix::identity(n),
                from_model: IntMatrix::identity(n),
            });
        }
        let m = IntMatrix::from_rows(&diffs)?;
        let (d, _, v) = smith_normal_form(&m);
        let dim = (0..d.rows().min(d.cols()))
            .filter(|&i| !d.get(i, i).is_zero())
            .count();
        let to_model = v.transpose();
        let from_model = unimodular_inverse(&to_model)?;
        Ok(AffineFrame {
            origin,
            dim,
            to_model,
            from_model,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ambient_rank(&self) -> usize {
        self.origin.dim()
    }

    pub fn origin(&self) -> &IntVector {
        &self.origin
    }

    /// Full `n`-coordinate image of `x` in the adapted basis.
    pub(crate) fn adapted(&self, x: &IntVector) -> IntVector {
        self.to_model.mul_vec(&(x - &self.origin)).expect("rank checked")
    }

    pub(crate) fn forward_matrix(&self) -> &IntMatrix {
        &self.to_model
    }

    pub(crate) fn inverse_matrix(&self) -> &IntMatrix {
        &self.from_model
    }

    /// Coordinates of `x` in the span model, or `None` when `x` is off the span.
    pub fn to_model(&self, x: &IntVector) -> Option<IntVector> {
        let y = self.adapted(x);
        if y.coords()[self.dim..].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntVector::new(y.coords()[..self.dim].to_vec()))
    }

    pub fn from_model(&self, y: &IntVector) -> IntVector {
        let mut full = y.coords().to_vec();
        full.resize(self.ambient_rank(), BigInt::zero());
        &self
            .from_model
            .mul_vec(&IntVector::new(full))
            .expect("rank checked")
            + &self.origin
    }
}

/// Convex hull of finitely many lattice points.
#[derive(Clone, Debug)]
pub struct LatticePolytope {
    ambient_rank: usize,
    dim: usize,
    vertices: Vec<IntVector>,
    facets: Vec<Facet>,
    edges: OnceLock<Vec<Edge>>,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_rank == other.ambient_rank && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl Hash for LatticePolytope {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.ambient_rank.hash(state);
        self.vertices.hash(state);
    }
}

impl LatticePolytope {
    /// Convex hull of `points`; the stored vertex set is exactly the set of
    /// extreme points.
    pub fn hull(points: &[IntVector], ambient_rank: usize) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::EmptyInput);
        }
        for p in points {
            p.check_dim(ambient_rank)?;
        }
        let mut pts = points.to_vec();
        pts.sort();
        pts.dedup();
        let frame = AffineFrame::of_points(&pts)?;
        let dim = frame.dim();
        if dim == ambient_rank && dim > 0 {
            let (vertices, facets) = hull::full_dimensional_hull(&pts);
            return Ok(LatticePolytope {
                ambient_rank,
                dim,
                vertices,
                facets,
                edges: OnceLock::new(),
            });
        }
        let vertices = if dim == 0 {
            vec![pts[0].clone()]
        } else {
            let model: Vec<IntVector> = pts
                .iter()
                .map(|p| frame.to_model(p).expect("point lies on its own span"))
                .collect();
            let (mv, _) = hull::full_dimensional_hull(&model);
            let mut vs: Vec<IntVector> = mv.iter().map(|y| frame.from_model(y)).collect();
            vs.sort();
            vs
        };
        Ok(LatticePolytope {
            ambient_rank,
            dim,
            vertices,
            facets: Vec::new(),
            edges: OnceLock::new(),
        })
    }

    /// Hull of points given as `i64` rows; mainly for fixtures.
    pub fn from_i64_points(points: &[&[i64]]) -> Result<Self> {
        let rank = points.first().map_or(0, |p| p.len());
        let pts: Vec<IntVector> = points.iter().map(|p| IntVector::from_i64s(p)).collect();
        Self::hull(&pts, rank)
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.dim == self.ambient_rank
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn is_vertex(&self, v: &IntVector) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dim + 1
    }

    pub(crate) fn require_full_dimensional(&self) -> Result<()> {
        if self.is_full_dimensional() {
            Ok(())
        } else {
            Err(Error::NotFullDimensional {
                dim: self.dim,
                ambient: self.ambient_rank,
            })
        }
    }

    /// Irredundant facet inequalities with primitive inner normals.
    pub fn facets(&self) -> Result<&[Facet]> {
        self.require_full_dimensional()?;
        Ok(&self.facets)
    }

    /// `true` when `x` lies in the polytope; lower-dimensional polytopes are
    /// tested in their span model.
    pub fn contains(&self, x: &IntVector) -> bool {
        if self.is_full_dimensional() {
            return self.facets.iter().all(|f| !f.evaluate(x).is_negative());
        }
        if self.dim == 0 {
            return *x == self.vertices[0];
        }
        let (model, frame) = self.span_model();
        frame.to_model(x).is_some_and(|y| model.contains(&y))
    }

    /// `true` when every facet inequality is strict at `x` (full-dimensional only).
    pub fn contains_in_interior(&self, x: &IntVector) -> bool {
        self.is_full_dimensional() && self.facets.iter().all(|f| f.evaluate(x).is_positive())
    }

    /// Facets tight at `x`.
    pub fn facets_through<'a>(&'a self, x: &'a IntVector) -> impl Iterator<Item = &'a Facet> + 'a {
        self.facets.iter().filter(move |f| f.evaluate(x).is_zero())
    }

    /// The polytope restricted to its affine span, as a full-dimensional
    /// polytope in `Z^dim`, together with the frame used.
    pub fn span_model(&self) -> (LatticePolytope, AffineFrame) {
        let frame = AffineFrame::of_points(&self.vertices).expect("nonempty");
        if self.is_full_dimensional() {
            // keep ambient coordinates: identity frame anchored at the origin
            let n = self.ambient_rank;
            let frame = AffineFrame {
                origin: IntVector::zero(n),
                dim: n,
                to_model: IntMatrix::identity(n),
                from_model: IntMatrix::identity(n),
            };
            return (self.clone(), frame);
        }
        let model: Vec<IntVector> = self
            .vertices
            .iter()
            .map(|v| frame.to_model(v).expect("vertex on span"))
            .collect();
        let p = LatticePolytope::hull(&model, frame.dim()).expect("nonempty");
        (p, frame)
    }

    /// All 1-faces with their lattice lengths, sorted.
    pub fn edges(&self) -> &[Edge] {
        self.edges.get_or_init(|| self.compute_edges())
    }

    fn compute_edges(&self) -> Vec<Edge> {
        if self.dim == 0 {
            return Vec::new();
        }
        if !self.is_full_dimensional() {
            let (model, frame) = self.span_model();
            let mut edges: Vec<Edge> = model
                .edges()
                .iter()
                .map(|e| Edge::new(frame.from_model(&e.endpoints.0), frame.from_model(&e.endpoints.1)))
                .collect();
            edges.sort();
            return edges;
        }
        let d = self.dim;
        let tight: Vec<Vec<bool>> = self
            .vertices
            .iter()
            .map(|v| self.facets.iter().map(|f| f.evaluate(v).is_zero()).collect())
            .collect();
        let mut edges = Vec::new();
        for i in 0..self.vertices.len() {
            for j in i + 1..self.vertices.len() {
                let common: Vec<IntVector> = (0..self.facets.len())
                    .filter(|&k| tight[i][k] && tight[j][k])
                    .map(|k| self.facets[k].normal.clone())
                    .collect();
                if common.len() + 1 < d {
                    continue;
                }
                let rank = if common.is_empty() {
                    0
                } else {
                    IntMatrix::from_rows(&common).expect("equal dims").rank()
                };
                if rank == d - 1 {
                    edges.push(Edge::new(self.vertices[i].clone(), self.vertices[j].clone()));
                }
            }
        }
        edges.sort();
        edges
    }

    /// Edges through the vertex `v`.
    pub fn edges_at<'a>(&'a self, v: &'a IntVector) -> impl Iterator<Item = &'a Edge> + 'a {
        self.edges().iter().filter(move |e| e.has_endpoint(v))
    }

    /// Minimum lattice length over all edges (`None` for a point).
    pub fn min_edge_length(&self) -> Option<BigInt> {
        self.edges().iter().map(|e| e.lattice_length.clone()).min()
    }

    /// `k * P`.
    pub fn dilate(&self, k: u64) -> Result<LatticePolytope> {
        if k == 0 {
            return Err(Error::InvalidDilation);
        }
        let kk = BigInt::from(k);
        Ok(LatticePolytope {
            ambient_rank: self.ambient_rank,
            dim: self.dim,
            vertices: self.vertices.iter().map(|v| v.scaled(&kk)).collect(),
            facets: self
                .facets
                .iter()
                .map(|f| Facet::new(f.normal.clone(), &f.offset * &kk))
                .collect(),
            edges: OnceLock::new(),
        })
    }

    /// `P + t`.
    pub fn translate(&self, t: &IntVector) -> Result<LatticePolytope> {
        t.check_dim(self.ambient_rank)?;
        let mut vertices: Vec<IntVector> = self.vertices.iter().map(|v| v + t).collect();
        vertices.sort();
        Ok(LatticePolytope {
            ambient_rank: self.ambient_rank,
            dim: self.dim,
            vertices,
            facets: self
                .facets
                .iter()
                .map(|f| Facet::new(f.normal.clone(), &f.offset - f.normal.dot(t)))
                .collect(),
            edges: OnceLock::new(),
        })
    }

    /// Image under an affine unimodular map.
    pub fn image(&self, f: &crate::lattice_algebra::AffineUnimodularMap) -> Result<LatticePolytope> {
        let pts: Vec<IntVector> = self
            .vertices
            .iter()
            .map(|v| f.apply(v))
            .collect::<Result<_>>()?;
        LatticePolytope::hull(&pts, self.ambient_rank)
    }

    /// Bounding box `(min, max)` of the vertex set.
    pub fn bounding_box(&self) -> (IntVector, IntVector) {
        let n = self.ambient_rank;
        let lo = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].clone()).min().expect("nonempty"))
            .collect();
        let hi = (0..n)
            .map(|i| self.vertices.iter().map(|v| v[i].clone()).max().expect("nonempty"))
            .collect();
        (IntVector::new(lo), IntVector::new(hi))
    }

    /// Normalized lattice volume `dim! * vol` of a full-dimensional polytope.
    pub fn normalized_volume(&self) -> Result<BigInt> {
        self.require_full_dimensional()?;
        Ok(triangulated_volume(&self.vertices, &self.facets, self.dim))
    }
}

/// Pyramids over the facets missing the first vertex: each contributes its
/// lattice height times the normalized volume of the facet.
fn triangulated_volume(vertices: &[IntVector], facets: &[Facet], d: usize) -> BigInt {
    if d == 1 {
        let lo = vertices.iter().min().expect("nonempty");
        let hi = vertices.iter().max().expect("nonempty");
        return (&hi[0] - &lo[0]).abs();
    }
    let apex = &vertices[0];
    let mut total = BigInt::zero();
    for f in facets {
        let h = f.evaluate(apex);
        if h.is_zero() {
            continue;
        }
        let on: Vec<IntVector> = vertices.iter().filter(|v| f.evaluate(v).is_zero()).cloned().collect();
        let facet_poly = LatticePolytope::hull(&on, d).expect("facet is nonempty");
        let (model, _) = facet_poly.span_model();
        let base = triangulated_volume(model.vertices(), &model.facets, d - 1);
        total += base * h;
    }
    total
}

impl fmt::Display for LatticePolytope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Convex hull of the given points; see [`LatticePolytope::hull`].
pub fn hull_from_points(points: &[IntVector], ambient_rank: usize) -> Result<LatticePolytope> {
    LatticePolytope::hull(points, ambient_rank)
}

/// The facet description; errors for lower-dimensional input.
pub fn facet_description(p: &LatticePolytope) -> Result<Vec<Facet>> {
    p.facets().map(<[Facet]>::to_vec)
}

pub fn edge_skeleton(p: &LatticePolytope) -> Vec<Edge> {
    p.edges().to_vec()
}

pub fn dilate(p: &LatticePolytope, k: u64) -> Result<LatticePolytope> {
    p.dilate(k)
}
