//! Unimodular equivalence with explicit witnesses, and the polytope file format.
//!
//! cargo run --example equivalence

use latpoly::harness::{parse_polytope, serialize_polytope};
use latpoly::polytope::lattice_equivalent;

fn main() -> latpoly::error::Result<()> {
    let p = parse_polytope("# a lattice quadrilateral\n4 2\n0 0\n3 0\n0 1\n1 1\n")?;
    let q = parse_polytope("4 2\n10 7\n13 10\n11 9\n12 10\n")?;
    print!("P:\n{}Q:\n{}", serialize_polytope(&p), serialize_polytope(&q));
    match lattice_equivalent(&p, &q) {
        Some(f) => {
            println!("equivalent via x -> A x + t");
            for row in f.linear().row_vectors() {
                println!("  {row}");
            }
            println!("  t = {}", f.translation());
            for v in p.vertices() {
                println!("  {v} -> {}", f.apply(v)?);
            }
        }
        None => println!("not equivalent"),
    }
    let r = parse_polytope("4 2\n0 0\n2 0\n0 2\n2 2\n")?;
    println!("P ~ 2x2 square: {}", lattice_equivalent(&p, &r).is_some());

    match parse_polytope("3 2\n0 0\n1 x\n") {
        Err(e) => println!("malformed input: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
