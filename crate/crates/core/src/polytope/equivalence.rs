//! Lattice (affine unimodular) equivalence of polytopes.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::LatticePolytope;
use crate::lattice_algebra::{AffineUnimodularMap, IntMatrix, IntVector};
use crate::points::{interior_lattice_points, lattice_points};

/// Invariants of a polytope under lattice equivalence, used to prune searches
/// and to bucket corpora before exact tests.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fingerprint {
    pub dim: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub edge_lengths: Vec<BigInt>,
    /// `|kP ∩ M|` for `k = 1..=depth`.
    pub point_counts: Vec<usize>,
    /// `|Int(kP) ∩ M|` for `k = 1..=depth`.
    pub interior_counts: Vec<usize>,
}

impl Fingerprint {
    pub fn of(p: &LatticePolytope, depth: u64) -> Fingerprint {
        let mut edge_lengths: Vec<BigInt> = p.edges().iter().map(|e| e.lattice_length.clone()).collect();
        edge_lengths.sort();
        let mut point_counts = Vec::new();
        let mut interior_counts = Vec::new();
        for k in 1..=depth {
            let kp = p.dilate(k).expect("k >= 1");
            point_counts.push(lattice_points(&kp).len());
            if p.is_full_dimensional() {
                interior_counts.push(interior_lattice_points(&kp).len());
            }
        }
        Fingerprint {
            dim: p.dim(),
            vertex_count: p.vertices().len(),
            facet_count: p.facets.len(),
            edge_lengths,
            point_counts,
            interior_counts,
        }
    }
}

/// Searches for an affine unimodular map carrying the vertex set of `p` onto
/// that of `q`.
///
/// The search matches a frame at one vertex of `p` (the vertex and `d` of its
/// neighbours along edges, with independent directions) against every vertex
/// of `q` and ordered choices of its neighbours with equal edge lengths; each
/// candidate map is checked for integrality, unimodularity and bijectivity on
/// vertices.
pub fn lattice_equivalent(p: &LatticePolytope, q: &LatticePolytope) -> Option<AffineUnimodularMap> {
    if p.ambient_rank() != q.ambient_rank()
        || p.dim() != q.dim()
        || p.vertices().len() != q.vertices().len()
        || p.facets.len() != q.facets.len()
    {
        return None;
    }
    let mut lp: Vec<&BigInt> = p.edges().iter().map(|e| &e.lattice_length).collect();
    let mut lq: Vec<&BigInt> = q.edges().iter().map(|e| &e.lattice_length).collect();
    lp.sort();
    lq.sort();
    if lp != lq {
        return None;
    }
    if lattice_points(p).len() != lattice_points(q).len() {
        return None;
    }
    if p.dim() == 0 {
        return Some(AffineUnimodularMap::translation_by(&q.vertices()[0] - &p.vertices()[0]));
    }
    if p.is_full_dimensional() {
        return full_dimensional_equivalence(p, q);
    }
    let (pm, pf) = p.span_model();
    let (qm, qf) = q.span_model();
    let g = full_dimensional_equivalence(&pm, &qm)?;
    // extend g by the identity on the complement of the span, then return to
    // ambient coordinates: x -> Cq^{-1} (G (Cp (x - p0))) + q0
    let n = p.ambient_rank();
    let r = p.dim();
    let mut block = IntMatrix::identity(n);
    for i in 0..r {
        for j in 0..r {
            block.set(i, j, g.linear().get(i, j).clone());
        }
    }
    let mut gt = g.translation().coords().to_vec();
    gt.resize(n, BigInt::zero());
    let gt = IntVector::new(gt);
    let linear = qf
        .inverse_matrix()
        .mul(&block)
        .and_then(|m| m.mul(pf.forward_matrix()))
        .ok()?;
    let translation = &(&qf.inverse_matrix().mul_vec(&gt).ok()? + qf.origin())
        - &linear.mul_vec(pf.origin()).ok()?;
    let map = AffineUnimodularMap::new(linear, translation).ok()?;
    verify_vertex_bijection(&map, p, q).then_some(map)
}

fn verify_vertex_bijection(map: &AffineUnimodularMap, p: &LatticePolytope, q: &LatticePolytope) -> bool {
    let mut image: Vec<IntVector> = p
        .vertices()
        .iter()
        .map(|v| map.apply(v).expect("rank checked"))
        .collect();
    image.sort();
    image == q.vertices()
}

/// Adjacency lists `(neighbour index, lattice length)` by vertex index.
fn adjacency(p: &LatticePolytope) -> Vec<Vec<(usize, BigInt)>> {
    let index = |v: &IntVector| p.vertices().binary_search(v).expect("edge endpoint is a vertex");
    let mut adj = vec![Vec::new(); p.vertices().len()];
    for e in p.edges() {
        let a = index(&e.endpoints.0);
        let b = index(&e.endpoints.1);
        adj[a].push((b, e.lattice_length.clone()));
        adj[b].push((a, e.lattice_length.clone()));
    }
    adj
}

fn full_dimensional_equivalence(p: &LatticePolytope, q: &LatticePolytope) -> Option<AffineUnimodularMap> {
    let d = p.dim();
    let adj_p = adjacency(p);
    let adj_q = adjacency(q);

    let v0 = (0..adj_p.len()).min_by_key(|&i| adj_p[i].len())?;
    let base = &p.vertices()[v0];
    // neighbours of v0 with linearly independent directions
    let mut frame: Vec<(usize, BigInt)> = Vec::new();
    let mut dirs: Vec<IntVector> = Vec::new();
    for (w, len) in &adj_p[v0] {
        dirs.push(&p.vertices()[*w] - base);
        if IntMatrix::from_rows(&dirs).ok()?.rank() == dirs.len() {
            frame.push((*w, len.clone()));
        } else {
            dirs.pop();
        }
        if frame.len() == d {
            break;
        }
    }
    if frame.len() != d {
        return None;
    }
    let mp = IntMatrix::from_columns(&dirs).ok()?;
    let det = mp.determinant().ok()?;
    let adj_mp = mp.adjugate().ok()?;

    let mut local_p: Vec<&BigInt> = adj_p[v0].iter().map(|(_, l)| l).collect();
    local_p.sort();
    let q_vertices: HashSet<&IntVector> = q.vertices().iter().collect();

    for u0 in 0..adj_q.len() {
        if adj_q[u0].len() != adj_p[v0].len() {
            continue;
        }
        let mut local_q: Vec<&BigInt> = adj_q[u0].iter().map(|(_, l)| l).collect();
        local_q.sort();
        if local_q != local_p {
            continue;
        }
        let mut chosen = Vec::with_capacity(d);
        let found = assign(
            &frame,
            &adj_q[u0],
            &mut chosen,
            &mut |targets: &[usize]| {
                let image = &q.vertices()[u0];
                let cols: Vec<IntVector> = targets.iter().map(|&t| &q.vertices()[t] - image).collect();
                let mq = IntMatrix::from_columns(&cols).ok()?;
                let num = mq.mul(&adj_mp).ok()?;
                if num.entries().iter().any(|x| !(x % &det).is_zero()) {
                    return None;
                }
                let entries = num.entries().iter().map(|x| x / &det).collect();
                let linear = IntMatrix::new(d, d, entries).ok()?;
                if !linear.determinant().ok()?.abs().eq(&BigInt::from(1)) {
                    return None;
                }
                let t = image - &linear.mul_vec(base).ok()?;
                let map = AffineUnimodularMap::new(linear, t).ok()?;
                p.vertices()
                    .iter()
                    .all(|v| q_vertices.contains(&map.apply(v).expect("rank")))
                    .then_some(map)
            },
        );
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Depth-first assignment of frame neighbours to distinct neighbours of the
/// image vertex with equal lattice length.
fn assign<F>(
    frame: &[(usize, BigInt)],
    candidates: &[(usize, BigInt)],
    chosen: &mut Vec<usize>,
    check: &mut F,
) -> Option<AffineUnimodularMap>
where
    F: FnMut(&[usize]) -> Option<AffineUnimodularMap>,
{
    if chosen.len() == frame.len() {
        return check(chosen);
    }
    let want = &frame[chosen.len()].1;
    for (c, len) in candidates {
        if len != want || chosen.contains(c) {
            continue;
        }
        chosen.push(*c);
        if let Some(m) = assign(frame, candidates, chosen, check) {
            return Some(m);
        }
        chosen.pop();
    }
    None
}
