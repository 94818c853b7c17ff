//! Incremental (beneath-beyond) convex hull in exact integer arithmetic for
//! full-dimensional point sets.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Facet;
use crate::lattice_algebra::{affine_rank, affinely_independent_subset, hyperplane_normal, IntMatrix, IntVector};

/// Vertices (sorted) and irredundant facets (sorted) of the hull of `points`,
/// which must affinely span `Z^d` with `d >= 1`.
pub(crate) fn full_dimensional_hull(points: &[IntVector]) -> (Vec<IntVector>, Vec<Facet>) {
    let d = points[0].dim();
    if d == 1 {
        let lo = points.iter().min().expect("nonempty").clone();
        let hi = points.iter().max().expect("nonempty").clone();
        let facets = vec![
            Facet::new(IntVector::from([-1]), hi[0].clone()),
            Facet::new(IntVector::from([1]), -&lo[0]),
        ];
        let mut facets = facets;
        facets.sort();
        return (vec![lo, hi], facets);
    }

    let refs: Vec<&IntVector> = points.iter().collect();
    let init = affinely_independent_subset(&refs);
    assert_eq!(init.len(), d + 1, "point set is not full-dimensional");

    let mut hull: Vec<IntVector> = init.iter().map(|&i| points[i].clone()).collect();
    let mut facets: Vec<Facet> = Vec::with_capacity(d + 1);
    for skip in 0..=d {
        let through: Vec<&IntVector> = (0..=d).filter(|&i| i != skip).map(|i| &hull[i]).collect();
        let normal = hyperplane_normal(&through);
        let offset = -normal.dot(through[0]);
        let mut f = Facet::new(normal, offset);
        if f.evaluate(&hull[skip]).is_negative() {
            f = f.flipped();
        }
        facets.push(f);
    }

    let in_init: BTreeSet<usize> = init.iter().copied().collect();
    for (idx, p) in points.iter().enumerate() {
        if in_init.contains(&idx) {
            continue;
        }
        let values: Vec<BigInt> = facets.iter().map(|f| f.evaluate(p)).collect();
        if values.iter().all(|v| !v.is_negative()) {
            // inside or on the boundary: never extreme
            continue;
        }
        let incidence: Vec<Vec<usize>> = facets
            .iter()
            .map(|f| {
                (0..hull.len())
                    .filter(|&j| f.evaluate(&hull[j]).is_zero())
                    .collect()
            })
            .collect();
        let visible: Vec<usize> = (0..facets.len()).filter(|&i| values[i].is_negative()).collect();
        let kept: Vec<usize> = (0..facets.len()).filter(|&i| !values[i].is_negative()).collect();

        let mut next: BTreeSet<Facet> = kept.iter().map(|&i| facets[i].clone()).collect();
        for &fv in &visible {
            for &fk in &kept {
                let ridge: Vec<usize> = incidence[fv]
                    .iter()
                    .filter(|j| incidence[fk].binary_search(j).is_ok())
                    .copied()
                    .collect();
                if ridge.len() + 1 < d {
                    continue;
                }
                let ridge_pts: Vec<&IntVector> = ridge.iter().map(|&j| &hull[j]).collect();
                if affine_rank(&ridge_pts) != Some(d - 2) {
                    continue;
                }
                let sub = affinely_independent_subset(&ridge_pts);
                let mut through: Vec<&IntVector> = sub.iter().map(|&j| ridge_pts[j]).collect();
                through.push(p);
                let normal = hyperplane_normal(&through);
                let offset = -normal.dot(p);
                let mut f = Facet::new(normal, offset);
                let witness = hull
                    .iter()
                    .map(|h| f.evaluate(h))
                    .find(|v| !v.is_zero())
                    .expect("full-dimensional hull");
                if witness.is_negative() {
                    f = f.flipped();
                }
                next.insert(f);
            }
        }
        facets = next.into_iter().collect();
        hull.push(p.clone());
        // drop points that fell strictly inside
        hull.retain(|h| facets.iter().any(|f| f.evaluate(h).is_zero()));
    }

    let mut vertices: Vec<IntVector> = hull
        .into_iter()
        .filter(|h| {
            let tight: Vec<IntVector> = facets
                .iter()
                .filter(|f| f.evaluate(h).is_zero())
                .map(|f| f.normal.clone())
                .collect();
            !tight.is_empty() && IntMatrix::from_rows(&tight).expect("equal dims").rank() == d
        })
        .collect();
    vertices.sort();
    vertices.dedup();
    facets.sort();
    (vertices, facets)
}
