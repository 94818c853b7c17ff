//! Vertex cones, Gorenstein points, Hilbert bases and very ampleness.
//!
//! cargo run --example gorenstein_cones

use latpoly::classification::{canonical_polytope, CanonicalFamily};
use latpoly::cones::{gorenstein_point, hilbert_basis, is_gorenstein, is_very_ample, vertex_cone, VertexCone};
use latpoly::lattice_algebra::IntVector;

fn main() -> latpoly::error::Result<()> {
    let d3 = canonical_polytope(&CanonicalFamily::Dn, 3)?;
    let origin = IntVector::zero(3);
    let cone = vertex_cone(&d3, &origin)?;
    println!("C_0(D_3) rays {:?}", cone.rays.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("facet normals {:?}", cone.cone_facets.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("Gorenstein point {:?}", gorenstein_point(&cone).map(|g| g.point.to_string()));
    println!("Hilbert basis {:?}", hilbert_basis(&cone)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("D_3 very ample: {}", is_very_ample(&d3)?);

    for (v, g) in is_gorenstein(&canonical_polytope(&CanonicalFamily::Qn, 3)?)? {
        println!("Q_3 at {v}: m0 = {:?}", g.map(|g| g.point.to_string()));
    }

    // a 2-dimensional cone of index 3
    let c = VertexCone::generated_by(&[IntVector::from([1, 0]), IntVector::from([1, 3])])?;
    println!("cone (1,0),(1,3): Hilbert basis {:?}", hilbert_basis(&c)?.iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("Gorenstein: {}", gorenstein_point(&c).is_some());
    Ok(())
}
