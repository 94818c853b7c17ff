//! Classifiers for polytopes with few interior points in their dilates.
//!
//! cargo run --example classification

use latpoly::classification::{
    canonical_polytope, classify_empty_interior, classify_empty_simplex, classify_gorenstein_small_interior,
    classify_unique_interior, empty_tetrahedron, CanonicalFamily, ClassificationVerdict,
};
use latpoly::lattice_algebra::{AffineUnimodularMap, IntMatrix, IntVector};
use latpoly::polytope::LatticePolytope;

fn report(name: &str, v: latpoly::error::Result<ClassificationVerdict>) {
    match v {
        Ok(v) => {
            print!("{name}: {}", v.family);
            if let Some(w) = v.witness {
                print!("  witness rows {:?} + {}", w.linear().row_vectors().iter().map(ToString::to_string).collect::<Vec<_>>(), w.translation());
            }
            println!();
        }
        Err(e) => println!("{name}: {e}"),
    }
}

fn main() -> latpoly::error::Result<()> {
    // P_2 and the unit square, moved by a shear
    let shear = AffineUnimodularMap::new(IntMatrix::from_i64_rows(&[&[1, 3], &[0, 1]]), IntVector::from([4, -1]))?;
    let p2 = canonical_polytope(&CanonicalFamily::Pn, 2)?.image(&shear)?;
    let q2 = canonical_polytope(&CanonicalFamily::Qn, 2)?.image(&shear)?;
    report("sheared P_2", classify_unique_interior(&p2));
    report("sheared Q_2", classify_unique_interior(&q2));
    report("Conv{0,3e1,e2}", classify_unique_interior(&LatticePolytope::from_i64_points(&[&[0, 0], &[3, 0], &[0, 1]])?));

    report("basic simplex", classify_empty_interior(&canonical_polytope(&CanonicalFamily::BasicSimplex, 3)?));

    let r = canonical_polytope(&CanonicalFamily::rn(vec![1, 2, 3])?, 3)?;
    report("R_3(1,2,3)", classify_gorenstein_small_interior(&r));
    report("Q'_3", classify_gorenstein_small_interior(&canonical_polytope(&CanonicalFamily::QprimeN, 3)?));

    for q in 2..=4 {
        report(&format!("empty tetrahedron p=1 q={q}"), classify_empty_simplex(&empty_tetrahedron(1, q)?));
    }
    Ok(())
}
