//! Adjoint polytopes, normal fans and the nef / very ample certificates.
//!
//! cargo run --example adjoint_certificates

use latpoly::adjoint::{
    adjoint_polytope, adjoint_very_ample, detect_exception, freeness_check, local_certificates, normal_fan,
    theorem_tm1_check, theorem_tm2_check,
};
use latpoly::classification::{canonical_polytope, CanonicalFamily};
use latpoly::polytope::LatticePolytope;

fn main() -> latpoly::error::Result<()> {
    let hexagon = LatticePolytope::from_i64_points(&[&[1, 0], &[0, 1], &[-1, 1], &[-1, 0], &[0, -1], &[1, -1]])?;
    let p = hexagon.dilate(2)?;
    println!("adjoint of 2*hexagon: {:?}", adjoint_polytope(&p).map(|a| a.to_string()));
    println!("normal fan rays {:?}", normal_fan(&p)?.rays.iter().map(ToString::to_string).collect::<Vec<_>>());

    let r = freeness_check(&p)?;
    for v in &r.vertices {
        println!("  vertex {}  m_v {:?}  interior {}", v.vertex, v.m_v.as_ref().map(ToString::to_string), v.m_v_interior);
    }
    println!("hypotheses {}  nef {}", r.hypotheses_hold, r.nef_certified);

    for (name, q) in [
        ("2 Delta^3", canonical_polytope(&CanonicalFamily::BasicSimplex, 3)?.dilate(2)?),
        ("2 R_3(1,1,1)", canonical_polytope(&CanonicalFamily::rn(vec![1, 1, 1])?, 3)?.dilate(2)?),
        ("Q_2", canonical_polytope(&CanonicalFamily::Qn, 2)?),
    ] {
        println!("{name}: exception {:?}", detect_exception(&q)?.map(|e| e.label()));
    }
    let t = theorem_tm1_check(&canonical_polytope(&CanonicalFamily::Qn, 3)?.dilate(2)?)?;
    println!("2 Q_3: exception {:?}, nef {}", t.exception.map(|e| e.label()), t.nef);

    let d3 = canonical_polytope(&CanonicalFamily::Dn, 3)?;
    for k in [3, 4] {
        let a = adjoint_very_ample(&d3.dilate(k)?)?;
        let bad: Vec<String> = a.vertices.iter().filter_map(|v| v.violator.as_ref().map(|x| format!("{x} at {}", v.vertex))).collect();
        println!("{k} D_3: adjoint very ample {}  violators {:?}", a.ok, bad);
    }
    let t = theorem_tm2_check(&hexagon.dilate(3)?)?;
    println!("3*hexagon: edges >= {}, hypotheses {}, very ample {}", t.min_edge_length, t.hypotheses_hold, t.very_ample);

    for c in local_certificates(&canonical_polytope(&CanonicalFamily::Qn, 3)?.dilate(2)?)?.iter().take(2) {
        println!("local certificate at {}: r = {:?}, inclusion {:?}", c.vertex, c.r, c.inclusion_holds);
    }
    Ok(())
}
