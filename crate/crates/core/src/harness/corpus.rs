//! Deterministic corpora of small lattice polytopes.

use std::collections::{BTreeMap, HashSet};

use itertools::Itertools;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice_algebra::{IntMatrix, IntVector};
use crate::polytope::{lattice_equivalent, Fingerprint, LatticePolytope};

/// Upper bound on the number of point subsets an exhaustive corpus may hull.
pub const EXHAUSTIVE_SUBSET_GUARD: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusMode {
    Exhaustive,
    Random,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusSpec {
    pub mode: CorpusMode,
    pub rank: usize,
    /// Coordinates are drawn from `0..=bound`.
    pub bound: u32,
    pub max_vertices: usize,
    /// Number of polytopes in random mode.
    pub count: usize,
    pub seed: u64,
}

impl CorpusSpec {
    pub fn exhaustive(rank: usize, bound: u32, max_vertices: usize) -> Self {
        CorpusSpec {
            mode: CorpusMode::Exhaustive,
            rank,
            bound,
            max_vertices,
            count: 0,
            seed: 0,
        }
    }

    pub fn random(rank: usize, bound: u32, max_vertices: usize, count: usize, seed: u64) -> Self {
        CorpusSpec {
            mode: CorpusMode::Random,
            rank,
            bound,
            max_vertices,
            count,
            seed,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.bound < 1 {
            return Err(Error::InvalidParameters("coordinate bound must be at least 1".into()));
        }
        if self.rank < 1 {
            return Err(Error::InvalidParameters("rank must be at least 1".into()));
        }
        if self.max_vertices < self.rank + 1 {
            return Err(Error::InvalidParameters(format!(
                "max vertex count {} cannot span rank {}",
                self.max_vertices, self.rank
            )));
        }
        Ok(())
    }
}

/// The substream of `seed` reserved for case `index`.
pub fn case_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Hull of between `rank + 1` and `max_vertices` uniform points of
/// `{0..=bound}^rank`, redrawn until full-dimensional.
pub fn random_polytope(rng: &mut impl Rng, rank: usize, bound: u32, max_vertices: usize) -> LatticePolytope {
    loop {
        let m = rng.gen_range(rank + 1..=max_vertices.max(rank + 1));
        let pts: Vec<IntVector> = (0..m)
            .map(|_| IntVector::new((0..rank).map(|_| BigInt::from(rng.gen_range(0..=bound))).collect()))
            .collect();
        let p = LatticePolytope::hull(&pts, rank).expect("nonempty, consistent rank");
        if p.is_full_dimensional() {
            return p;
        }
    }
}

/// A product of `2 * rank` random elementary matrices with small multipliers,
/// composed with a random signed permutation.
pub fn random_unimodular(rng: &mut impl Rng, rank: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(rank);
    if rank < 2 {
        return m;
    }
    for _ in 0..2 * rank {
        let i = rng.gen_range(0..rank);
        let mut j = rng.gen_range(0..rank - 1);
        if j >= i {
            j += 1;
        }
        let c = BigInt::from(rng.gen_range(-2i64..=2));
        for col in 0..rank {
            let v = m.get(i, col) + &c * m.get(j, col);
            m.set(i, col, v);
        }
    }
    let mut perm: Vec<usize> = (0..rank).collect();
    for i in (1..rank).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut out = IntMatrix::zeros(rank, rank);
    for (i, &pi) in perm.iter().enumerate() {
        let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
        for col in 0..rank {
            out.set(i, col, m.get(pi, col) * sign);
        }
    }
    out
}

fn subset_count(points: u64, lo: usize, hi: usize) -> u64 {
    let mut total: u64 = 0;
    for k in lo..=hi {
        let mut c: u64 = 1;
        for i in 0..k as u64 {
            if i >= points {
                c = 0;
                break;
            }
            c = c.saturating_mul(points - i) / (i + 1);
        }
        total = total.saturating_add(c);
    }
    total
}

/// Full-dimensional polytopes described by `spec`, in a deterministic order.
///
/// Exhaustive mode keeps one representative per lattice-equivalence class;
/// random mode yields exactly `count` draws, case `i` using substream `i`.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<LatticePolytope>> {
    spec.validate()?;
    match spec.mode {
        CorpusMode::Random => Ok((0..spec.count as u64)
            .map(|i| random_polytope(&mut case_rng(spec.seed, i), spec.rank, spec.bound, spec.max_vertices))
            .collect()),
        CorpusMode::Exhaustive => exhaustive(spec),
    }
}

fn exhaustive(spec: &CorpusSpec) -> Result<Vec<LatticePolytope>> {
    let n = spec.rank;
    let side = spec.bound as u64 + 1;
    let total = side.checked_pow(n as u32).unwrap_or(u64::MAX);
    let subsets = subset_count(total, n + 1, spec.max_vertices);
    if subsets > EXHAUSTIVE_SUBSET_GUARD {
        return Err(Error::ResourceGuard(format!(
            "exhaustive corpus would hull {subsets} subsets (limit {EXHAUSTIVE_SUBSET_GUARD})"
        )));
    }
    let grid: Vec<IntVector> = (0..n)
        .map(|_| 0..=spec.bound as i64)
        .multi_cartesian_product()
        .map(|c| IntVector::from_i64s(&c))
        .collect();

    let mut seen: HashSet<Vec<IntVector>> = HashSet::new();
    let mut buckets: BTreeMap<Fingerprint, Vec<usize>> = BTreeMap::new();
    let mut out: Vec<LatticePolytope> = Vec::new();
    for k in n + 1..=spec.max_vertices {
        for subset in grid.iter().cloned().combinations(k) {
            let p = LatticePolytope::hull(&subset, n)?;
            // smaller hulls were met as smaller subsets
            if !p.is_full_dimensional() || p.vertices().len() < k {
                continue;
            }
            // representatives are translated to touch every coordinate plane
            let (lo, _) = p.bounding_box();
            let p = p.translate(&-&lo)?;
            if !seen.insert(p.vertices().to_vec()) {
                continue;
            }
            let fp = Fingerprint::of(&p, n as u64);
            let bucket = buckets.entry(fp).or_default();
            if bucket.iter().any(|&i| lattice_equivalent(&out[i], &p).is_some()) {
                continue;
            }
            bucket.push(out.len());
            out.push(p);
        }
    }
    Ok(out)
}
