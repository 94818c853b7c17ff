//! Lattice points, interiors of dilates and the normality test.
//!
//! cargo run --example lattice_points

use latpoly::classification::{canonical_polytope, CanonicalFamily};
use latpoly::points::{interior_lattice_points, lattice_points, lattice_points_with, normality_check, EnumerationStrategy};
use latpoly::polytope::LatticePolytope;

fn main() -> latpoly::error::Result<()> {
    let hexagon = LatticePolytope::from_i64_points(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]])?;
    let pts = lattice_points(&hexagon);
    assert_eq!(pts, lattice_points_with(&hexagon, EnumerationStrategy::BoxScan));
    let interior: Vec<String> = interior_lattice_points(&hexagon).iter().map(ToString::to_string).collect();
    println!("hexagon: {} lattice points, interior {interior:?}", pts.len());

    println!("k  #(kP)  #Int(kP)");
    for k in 1..=4 {
        let d = hexagon.dilate(k)?;
        println!("{k}  {:5}  {:8}", lattice_points(&d).len(), interior_lattice_points(&d).len());
    }

    let d3 = canonical_polytope(&CanonicalFamily::Dn, 3)?;
    let r = normality_check(&d3)?;
    let missing: Vec<String> = r.missing.iter().map(ToString::to_string).collect();
    println!("D_3 normal: {}, first failing level {:?}, missing {missing:?}", r.normal, r.first_failing_k);
    println!("2 D_3 normal: {}", normality_check(&d3.dilate(2)?)?.normal);
    Ok(())
}
