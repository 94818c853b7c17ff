mod common;

use num_bigint::BigInt;
use proptest::prelude::*;

use latpoly::harness::corpus::random_unimodular;
use latpoly::harness::{case_rng, parse_polytope, serialize_polytope};
use latpoly::lattice_algebra::{hermite_normal_form, smith_normal_form, AffineUnimodularMap, IntMatrix, IntVector};
use latpoly::points::{interior_lattice_points, lattice_points_with, EnumerationStrategy};
use latpoly::polytope::{lattice_equivalent, LatticePolytope};

use common::{box_points, small};

fn point_cloud(rank: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, rank), 1..=7)
}

fn polytope(rank: usize) -> impl Strategy<Value = LatticePolytope> {
    point_cloud(rank).prop_map(move |pts| {
        let pts: Vec<IntVector> = pts.iter().map(|p| IntVector::from_i64s(p)).collect();
        LatticePolytope::hull(&pts, rank).unwrap()
    })
}

fn full_dimensional(rank: usize) -> impl Strategy<Value = LatticePolytope> {
    polytope(rank).prop_filter("full-dimensional", |p| p.is_full_dimensional())
}

fn small_matrix(rank: usize) -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec(-4i64..=4, rank * rank)
        .prop_map(move |e| IntMatrix::new(rank, rank, e.into_iter().map(BigInt::from).collect()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn slicing_matches_box_scan(p in (1usize..=3).prop_flat_map(polytope)) {
        let slicing = lattice_points_with(&p, EnumerationStrategy::Slicing);
        let scan = lattice_points_with(&p, EnumerationStrategy::BoxScan);
        prop_assert_eq!(slicing, scan);
    }

    #[test]
    fn points_obey_every_facet(p in (2usize..=3).prop_flat_map(full_dimensional)) {
        let (lo, hi) = p.bounding_box();
        let facets = p.facets().unwrap();
        let direct: Vec<IntVector> = box_points(&small(&lo), &small(&hi))
            .iter()
            .map(|x| IntVector::from_i64s(x))
            .filter(|x| facets.iter().all(|f| f.evaluate(x) > BigInt::from(0)))
            .collect();
        prop_assert_eq!(interior_lattice_points(&p).into_vec(), direct);
    }

    #[test]
    fn vertices_are_extreme(p in (1usize..=3).prop_flat_map(polytope)) {
        for v in p.vertices() {
            let rest: Vec<IntVector> = p.vertices().iter().filter(|w| *w != v).cloned().collect();
            if rest.is_empty() {
                continue;
            }
            let q = LatticePolytope::hull(&rest, p.ambient_rank()).unwrap();
            prop_assert!(!q.contains(v));
        }
    }

    #[test]
    fn dilation_scales_edges(p in (2usize..=3).prop_flat_map(full_dimensional), k in 1u64..=4) {
        let q = p.dilate(k).unwrap();
        let mut a: Vec<BigInt> = p.edges().iter().map(|e| &e.lattice_length * k).collect();
        let mut b: Vec<BigInt> = q.edges().iter().map(|e| e.lattice_length.clone()).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert_eq!(q.normalized_volume().unwrap(), p.normalized_volume().unwrap() * BigInt::from(k).pow(p.dim() as u32));
    }

    #[test]
    fn equivalence_finds_hidden_maps(p in (2usize..=3).prop_flat_map(full_dimensional), seed in 0u64..1000) {
        let n = p.ambient_rank();
        let mut rng = case_rng(seed, 0);
        let f = AffineUnimodularMap::new(random_unimodular(&mut rng, n), IntVector::from_i64s(&vec![2; n])).unwrap();
        let q = p.image(&f).unwrap();
        let w = lattice_equivalent(&p, &q);
        prop_assert!(w.is_some());
        let mut image: Vec<IntVector> = p.vertices().iter().map(|v| w.as_ref().unwrap().apply(v).unwrap()).collect();
        image.sort();
        prop_assert_eq!(image.as_slice(), q.vertices());
        prop_assert!(lattice_equivalent(&q, &p).is_some());
    }

    #[test]
    fn dilates_are_not_equivalent(p in (2usize..=3).prop_flat_map(full_dimensional)) {
        prop_assert!(lattice_equivalent(&p, &p.dilate(2).unwrap()).is_none());
    }

    #[test]
    fn format_round_trips(p in (1usize..=4).prop_flat_map(polytope)) {
        let text = serialize_polytope(&p);
        let back = parse_polytope(&text).unwrap();
        prop_assert_eq!(serialize_polytope(&back), text);
        prop_assert_eq!(back, p);
    }

    #[test]
    fn hermite_form_is_reachable(a in (1usize..=4).prop_flat_map(small_matrix)) {
        let (h, u) = hermite_normal_form(&a);
        prop_assert!(u.is_unimodular());
        prop_assert_eq!(u.mul(&a).unwrap(), h);
    }

    #[test]
    fn smith_form_divides_down_the_diagonal(a in (1usize..=4).prop_flat_map(small_matrix)) {
        let (d, u, v) = smith_normal_form(&a);
        prop_assert!(u.is_unimodular() && v.is_unimodular());
        prop_assert_eq!(u.mul(&a).unwrap().mul(&v).unwrap(), d.clone());
        let n = a.rows();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    prop_assert_eq!(d.get(i, j), &BigInt::from(0));
                }
            }
            if i + 1 < n && *d.get(i, i) != BigInt::from(0) {
                prop_assert_eq!(d.get(i + 1, i + 1) % d.get(i, i), BigInt::from(0));
            }
        }
    }
}
