//! Exact lattice polytopes.
//!
//! Convex hulls and lattice points in arbitrary precision, Gorenstein and
//! very ample vertex cones, classifiers for polytopes whose dilates have few
//! interior points, certificates for nefness and very ampleness of adjoint
//! bundles on the associated toric varieties, and a harness that runs each
//! classical statement as a falsification campaign over generated corpora.
//!
//! ```
//! use latpoly::points::interior_lattice_points;
//! use latpoly::polytope::LatticePolytope;
//!
//! let p = LatticePolytope::from_i64_points(&[&[0, 0], &[2, 0], &[0, 1]]).unwrap();
//! let inner = interior_lattice_points(&p.dilate(2).unwrap());
//! assert_eq!(inner.len(), 1);
//! ```
//!
//! The `examples/` directory has one runnable program per area.

pub mod error;
pub mod lattice_algebra;
pub mod points;
pub mod polytope;
pub mod cones;
pub mod classification;
pub mod adjoint;
pub mod harness;
