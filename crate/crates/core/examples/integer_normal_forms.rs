//! Hermite and Smith normal forms and integer linear systems.
//!
//! cargo run --example integer_normal_forms

use latpoly::lattice_algebra::{
    hermite_normal_form, smith_normal_form, solve_all_ones_system, solve_integer_system, IntMatrix, IntVector,
};

fn show(name: &str, m: &IntMatrix) {
    println!("{name}:");
    for row in m.row_vectors() {
        println!("  {row}");
    }
}

fn main() -> latpoly::error::Result<()> {
    let a = IntMatrix::from_i64_rows(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
    let (h, u) = hermite_normal_form(&a);
    show("H = U A", &h);
    assert_eq!(u.mul(&a)?, h);

    let (d, u, v) = smith_normal_form(&a);
    show("D = U A V", &d);
    assert_eq!(u.mul(&a)?.mul(&v)?, d);

    let b = IntVector::from([2, 0, 6]);
    match solve_integer_system(&a, &b)? {
        Some(s) => println!("A x = {b}: x = {} (unique: {})", s.point, s.unique),
        None => println!("A x = {b}: no integer solution"),
    }

    // facet normals of the D_3 vertex cone at the origin
    let normals = [IntVector::from([2, 0, -1]), IntVector::from([0, 2, -1]), IntVector::from([0, 0, 1])];
    println!("all-ones system: {:?}", solve_all_ones_system(&normals)?.map(|s| s.point.to_string()));
    Ok(())
}
