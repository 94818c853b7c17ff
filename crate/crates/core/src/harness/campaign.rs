//! Falsification campaigns: one per theorem-level claim, each evaluating a
//! hypothesis predicate and, independently, a conclusion predicate.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_integer::Integer;
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::adjoint::{freeness_check, theorem_tm2_check};
use crate::classification::{
    canonical_polytope, classify_empty_interior, classify_empty_simplex,
    classify_gorenstein_small_interior, classify_unique_interior, empty_tetrahedron,
    witness_maps_onto, CanonicalFamily, ClassificationVerdict,
};
use crate::cones::{gorenstein_point_in_local_dilates, is_gorenstein_polytope};
use crate::error::{Error, Result};
use crate::lattice_algebra::{AffineUnimodularMap, IntVector};
use crate::points::{count_interior_of_dilate, lattice_points, level_generation_check};
use crate::polytope::{lattice_equivalent, LatticePolytope};

use super::corpus::{case_rng, generate_corpus, random_polytope, random_unimodular, CorpusMode, CorpusSpec};
use super::format::serialize_polytope;

/// Draws per requested hit before a hunting campaign gives up.
pub const HUNT_BUDGET_FACTOR: usize = 400;
const HUNT_CHUNK: usize = 32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CampaignId {
    LemmaL1,
    Nakagawa,
    LemmaL2,
    LemmaL3,
    PropP1,
    PropP1a,
    Lemma3l0,
    PropPr1,
    Prop5p1,
    ThmTm2,
}

impl CampaignId {
    pub const ALL: [CampaignId; 10] = [
        CampaignId::LemmaL1,
        CampaignId::Nakagawa,
        CampaignId::LemmaL2,
        CampaignId::LemmaL3,
        CampaignId::PropP1,
        CampaignId::PropP1a,
        CampaignId::Lemma3l0,
        CampaignId::PropPr1,
        CampaignId::Prop5p1,
        CampaignId::ThmTm2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CampaignId::LemmaL1 => "lemma-l1",
            CampaignId::Nakagawa => "nakagawa",
            CampaignId::LemmaL2 => "lemma-l2",
            CampaignId::LemmaL3 => "lemma-l3",
            CampaignId::PropP1 => "prop-p1",
            CampaignId::PropP1a => "prop-p1a",
            CampaignId::Lemma3l0 => "lemma-3l0",
            CampaignId::PropPr1 => "prop-pr1",
            CampaignId::Prop5p1 => "prop-5p1",
            CampaignId::ThmTm2 => "thm-tm2",
        }
    }

    /// Campaigns whose hypotheses are too rare among raw random hulls; in
    /// random mode they draw Gorenstein polytopes, move them by a random
    /// unimodular map, dilate them, and stop after `count` hypothesis hits.
    pub fn hunts(self) -> bool {
        matches!(
            self,
            CampaignId::PropP1a | CampaignId::Lemma3l0 | CampaignId::Prop5p1 | CampaignId::ThmTm2
        )
    }
}

impl fmt::Display for CampaignId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CampaignId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CampaignId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCampaign(s.to_string()))
    }
}

impl Serialize for CampaignId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Failure {
    /// The offending polytope in the file format.
    pub polytope: String,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub campaign: CampaignId,
    pub spec: CorpusSpec,
    pub examined: usize,
    pub hypothesis_count: usize,
    /// Conclusion outcomes among hypothesis-satisfying cases.
    pub verdicts: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub wall_time: Duration,
}

impl CampaignReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Stable JSON; wall time is left out so equal runs give equal bytes.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// What one case contributed.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CaseOutcome {
    pub hypothesis: bool,
    pub verdict: Option<String>,
    pub failure: Option<String>,
}

impl CaseOutcome {
    fn skipped() -> Self {
        CaseOutcome::default()
    }

    fn checked(verdict: impl Into<String>, failure: Option<String>) -> Self {
        CaseOutcome {
            hypothesis: true,
            verdict: Some(verdict.into()),
            failure,
        }
    }

    fn holds_if(failure: Option<String>) -> Self {
        let verdict = if failure.is_none() { "holds" } else { "fails" };
        CaseOutcome::checked(verdict, failure)
    }
}

fn interior_empty(p: &LatticePolytope, k: u64) -> bool {
    count_interior_of_dilate(p, k) == 0
}

fn is_empty_simplex(p: &LatticePolytope) -> bool {
    p.is_simplex() && lattice_points(p).len() == p.dim() + 1
}

fn first_level_failure(p: &LatticePolytope, ks: impl IntoIterator<Item = u64>) -> Result<Option<String>> {
    for k in ks {
        let g = level_generation_check(p, k)?;
        if !g.holds {
            return Ok(Some(format!(
                "level generation fails at k = {k}; {} missing, first {}",
                g.missing.len(),
                g.missing[0]
            )));
        }
    }
    Ok(None)
}

/// Checks the verdict's witness against the canonical model and, when
/// `exclusive` lists other models, that none of them is equivalent.
fn audit_verdict(
    p: &LatticePolytope,
    verdict: &ClassificationVerdict,
    allowed: &[&str],
    exclusive: &[CanonicalFamily],
) -> Result<Option<String>> {
    let n = p.dim();
    let tag = verdict.family.tag();
    if !allowed.contains(&tag) {
        return Ok(Some(format!("verdict {} outside {}", verdict.family, allowed.join("/"))));
    }
    let model = canonical_polytope(&verdict.family, n)?;
    match &verdict.witness {
        Some(w) if witness_maps_onto(w, p, &model) => {}
        Some(_) => return Ok(Some(format!("witness for {} does not map onto the model", verdict.family))),
        None => return Ok(Some(format!("verdict {} has no witness", verdict.family))),
    }
    for other in exclusive.iter().filter(|f| **f != verdict.family) {
        if lattice_equivalent(p, &canonical_polytope(other, n)?).is_some() {
            return Ok(Some(format!("classified {} but also equivalent to {other}", verdict.family)));
        }
    }
    Ok(None)
}

fn classified(
    p: &LatticePolytope,
    result: Result<ClassificationVerdict>,
    allowed: &[&str],
    exclusive: &[CanonicalFamily],
) -> Result<CaseOutcome> {
    match result {
        Ok(v) => {
            let failure = audit_verdict(p, &v, allowed, exclusive)?;
            Ok(CaseOutcome::checked(v.family.to_string(), failure))
        }
        Err(Error::CounterexampleCandidate(m)) => Ok(CaseOutcome::checked("Other", Some(m))),
        Err(e) => Err(e),
    }
}

/// Evaluates campaign `id` on one polytope.
pub fn evaluate_case(id: CampaignId, p: &LatticePolytope) -> Result<CaseOutcome> {
    p.require_full_dimensional()?;
    let n = p.dim();
    let n64 = n as u64;
    match id {
        CampaignId::LemmaL1 => {
            let r = (1..n64).rev().find(|&r| interior_empty(p, r));
            match r {
                None => Ok(CaseOutcome::skipped()),
                Some(r) => Ok(CaseOutcome::holds_if(first_level_failure(p, (n64 - r).max(1)..=n64 + 2)?)),
            }
        }
        CampaignId::Nakagawa => Ok(CaseOutcome::holds_if(first_level_failure(
            p,
            n64.saturating_sub(1).max(1)..=n64 + 2,
        )?)),
        CampaignId::LemmaL2 => {
            if n < 2 || !is_empty_simplex(p) || !interior_empty(p, n64 - 1) {
                return Ok(CaseOutcome::skipped());
            }
            classified(p, classify_empty_simplex(p), &["BasicSimplex"], &[])
        }
        CampaignId::LemmaL3 => {
            if !interior_empty(p, n64) {
                return Ok(CaseOutcome::skipped());
            }
            classified(p, classify_empty_interior(p), &["BasicSimplex"], &[])
        }
        CampaignId::PropP1 => {
            if n < 2 || count_interior_of_dilate(p, n64) != 1 {
                return Ok(CaseOutcome::skipped());
            }
            classified(
                p,
                classify_unique_interior(p),
                &["Pn", "Qn"],
                &[CanonicalFamily::Pn, CanonicalFamily::Qn],
            )
        }
        CampaignId::PropP1a => {
            if n < 3
                || !interior_empty(p, n64 - 1)
                || interior_empty(p, n64)
                || !is_gorenstein_polytope(p)?
            {
                return Ok(CaseOutcome::skipped());
            }
            classified(p, classify_gorenstein_small_interior(p), &["Pn", "Qn", "Rn"], &[])
        }
        CampaignId::Lemma3l0 => {
            if !is_gorenstein_polytope(p)? {
                return Ok(CaseOutcome::skipped());
            }
            for v in p.vertices() {
                for c in gorenstein_point_in_local_dilates(p, v)? {
                    if c.interior_nonempty && !c.m0_interior {
                        return Ok(CaseOutcome::holds_if(Some(format!(
                            "at vertex {v}: Int({}Q) has lattice points but misses m0",
                            c.r
                        ))));
                    }
                }
            }
            Ok(CaseOutcome::holds_if(None))
        }
        CampaignId::PropPr1 => {
            if n < 3 || !is_empty_simplex(p) || count_interior_of_dilate(p, n64 - 1) != 1 {
                return Ok(CaseOutcome::skipped());
            }
            classified(p, classify_empty_simplex(p), &["Dn"], &[])
        }
        CampaignId::Prop5p1 => {
            let r = freeness_check(p)?;
            if !r.hypotheses_hold {
                return Ok(CaseOutcome::skipped());
            }
            let failure = r.vertices.iter().find(|v| !v.m_v_interior).map(|v| match &v.m_v {
                Some(m) => format!("m_v = {m} at vertex {} is not interior", v.vertex),
                None => format!("no Gorenstein point at vertex {}", v.vertex),
            });
            Ok(CaseOutcome::holds_if(failure))
        }
        CampaignId::ThmTm2 => {
            if !is_gorenstein_polytope(p)? {
                return Ok(CaseOutcome::skipped());
            }
            let r = theorem_tm2_check(p)?;
            if !r.hypotheses_hold {
                return Ok(CaseOutcome::skipped());
            }
            let failure = if let Some(m) = r.precondition_failure {
                Some(format!("adjoint is not ample on the fan of P: {m}"))
            } else {
                r.vertices.iter().find(|v| !v.ok).map(|v| match &v.violator {
                    Some(x) => format!("adjoint not very ample at {}; {x} is not generated", v.vertex),
                    None => format!("adjoint not very ample at {}", v.vertex),
                })
            };
            Ok(CaseOutcome::holds_if(failure))
        }
    }
}

/// `Conv{0, e_1, e_2, e_1 + p e_2 + q e_3}` for coprime `1 <= p < q <= 6`.
pub fn empty_tetrahedron_fixtures() -> Vec<LatticePolytope> {
    let mut out = Vec::new();
    for q in 2..=6i64 {
        for p in 1..q {
            if p.gcd(&q) == 1 {
                out.push(empty_tetrahedron(p, q).expect("valid fixture"));
            }
        }
    }
    out
}

fn hunt_dilation(id: CampaignId, rng: &mut impl Rng, n: u64) -> u64 {
    match id {
        CampaignId::Lemma3l0 => rng.gen_range(1..=2),
        CampaignId::Prop5p1 => rng.gen_range(n.saturating_sub(1).max(1)..=n),
        CampaignId::ThmTm2 => rng.gen_range(n + 1..=n + 2),
        _ => 1,
    }
}

/// Draw `index` of a hunting campaign: a random Gorenstein polytope in a
/// random lattice frame, dilated for the campaign, or the raw draw when it is
/// not Gorenstein.
pub fn hunting_draw(id: CampaignId, spec: &CorpusSpec, index: u64) -> Result<LatticePolytope> {
    let mut rng = case_rng(spec.seed, index);
    let p = random_polytope(&mut rng, spec.rank, spec.bound, spec.max_vertices);
    if !is_gorenstein_polytope(&p)? {
        return Ok(p);
    }
    let linear = random_unimodular(&mut rng, spec.rank);
    let shift = IntVector::from_i64s(&(0..spec.rank).map(|_| rng.gen_range(-3i64..=3)).collect::<Vec<_>>());
    let moved = p.image(&AffineUnimodularMap::new(linear, shift)?)?;
    moved.dilate(hunt_dilation(id, &mut rng, spec.rank as u64))
}

fn evaluate_all(id: CampaignId, cases: &[LatticePolytope]) -> Result<Vec<CaseOutcome>> {
    cases.par_iter().map(|p| evaluate_case(id, p)).collect()
}

/// Runs campaign `id` over the corpus described by `spec`.
pub fn run_campaign(id: CampaignId, spec: &CorpusSpec) -> Result<CampaignReport> {
    spec.validate()?;
    let start = Instant::now();
    let mut cases: Vec<(LatticePolytope, CaseOutcome)> = Vec::new();
    if id.hunts() && spec.mode == CorpusMode::Random {
        let budget = spec.count.saturating_mul(HUNT_BUDGET_FACTOR);
        let mut hits = 0;
        let mut next = 0usize;
        while hits < spec.count && next < budget {
            let end = (next + HUNT_CHUNK).min(budget);
            let chunk: Vec<(LatticePolytope, CaseOutcome)> = (next..end)
                .into_par_iter()
                .map(|i| {
                    let p = hunting_draw(id, spec, i as u64)?;
                    let o = evaluate_case(id, &p)?;
                    Ok((p, o))
                })
                .collect::<Result<_>>()?;
            next = end;
            for case in chunk {
                if hits == spec.count {
                    break;
                }
                hits += usize::from(case.1.hypothesis);
                cases.push(case);
            }
        }
    } else {
        let mut corpus = Vec::new();
        if id == CampaignId::PropPr1 && spec.rank == 3 {
            corpus.extend(empty_tetrahedron_fixtures());
        }
        corpus.extend(generate_corpus(spec)?);
        let outcomes = evaluate_all(id, &corpus)?;
        cases.extend(corpus.into_iter().zip(outcomes));
    }

    let mut verdicts: BTreeMap<String, usize> = BTreeMap::new();
    let mut failures = Vec::new();
    let mut hypothesis_count = 0;
    for (p, o) in &cases {
        if !o.hypothesis {
            continue;
        }
        hypothesis_count += 1;
        if let Some(v) = &o.verdict {
            *verdicts.entry(v.clone()).or_default() += 1;
        }
        if let Some(reason) = &o.failure {
            failures.push(Failure {
                polytope: serialize_polytope(p),
                reason: reason.clone(),
            });
        }
    }
    failures.sort();
    Ok(CampaignReport {
        campaign: id,
        spec: spec.clone(),
        examined: cases.len(),
        hypothesis_count,
        verdicts,
        failures,
        wall_time: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in CampaignId::ALL {
            assert_eq!(id.as_str().parse::<CampaignId>().unwrap(), id);
        }
        assert!(matches!("lemma-x".parse::<CampaignId>(), Err(Error::UnknownCampaign(_))));
    }

    #[test]
    fn fixtures_cover_coprime_pairs() {
        // coprime pairs with 1 <= p < q <= 6
        assert_eq!(empty_tetrahedron_fixtures().len(), 1 + 2 + 2 + 4 + 2);
    }

    #[test]
    fn lemma_l3_small_exhaustive() {
        let r = run_campaign(CampaignId::LemmaL3, &CorpusSpec::exhaustive(2, 2, 4)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.verdicts.get("BasicSimplex"), Some(&1));
    }

    #[test]
    fn prop_pr1_fixture_sweep() {
        let r = run_campaign(CampaignId::PropPr1, &CorpusSpec::random(3, 2, 4, 5, 1)).unwrap();
        assert!(r.passed(), "{:?}", r.failures);
        assert!(r.verdicts.get("Dn").copied().unwrap_or(0) >= 1);
    }

    #[test]
    fn level_range_starts_at_n_minus_r() {
        // D_3 fails level generation at k = 1, but with r = 1 only k >= 2 is demanded
        let d3 = canonical_polytope(&CanonicalFamily::Dn, 3).unwrap();
        let o = evaluate_case(CampaignId::LemmaL1, &d3).unwrap();
        assert!(o.hypothesis);
        assert!(o.failure.is_none(), "{o:?}");
    }
}
