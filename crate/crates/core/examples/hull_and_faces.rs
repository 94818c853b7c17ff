//! Convex hulls, facet inequalities, edges and volumes.
//!
//! cargo run --example hull_and_faces

use latpoly::lattice_algebra::IntVector;
use latpoly::polytope::LatticePolytope;

fn main() -> latpoly::error::Result<()> {
    // interior and repeated points are dropped by the hull
    let p = LatticePolytope::from_i64_points(&[
        &[0, 0, 0],
        &[2, 0, 0],
        &[0, 2, 0],
        &[0, 0, 2],
        &[1, 1, 0],
        &[0, 0, 2],
    ])?;
    println!("vertices of {}-polytope:", p.dim());
    for v in p.vertices() {
        println!("  {v}");
    }
    println!("facets <u, x> >= -b:");
    for f in p.facets()? {
        println!("  u = {}, b = {}", f.normal, f.offset);
    }
    for e in p.edges() {
        println!("edge {} -- {}  length {}", e.endpoints.0, e.endpoints.1, e.lattice_length);
    }
    println!("normalized volume {}", p.normalized_volume()?);

    let x = IntVector::from([1, 0, 1]);
    println!("{x} inside: {}, interior: {}", p.contains(&x), p.contains_in_interior(&x));

    // a segment in Z^3 keeps working through its span model
    let seg = LatticePolytope::from_i64_points(&[&[0, 0, 0], &[2, 4, 6]])?;
    let (model, _) = seg.span_model();
    println!("segment: dim {} in rank {}, model {}", seg.dim(), seg.ambient_rank(), model);
    Ok(())
}
