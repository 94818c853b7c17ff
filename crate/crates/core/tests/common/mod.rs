//! Independent small-integer oracles shared by the integration tests.
#![allow(dead_code)]

use latpoly::lattice_algebra::IntVector;
use latpoly::polytope::LatticePolytope;

pub fn poly(points: &[&[i64]]) -> LatticePolytope {
    LatticePolytope::from_i64_points(points).unwrap()
}

pub fn small(v: &IntVector) -> Vec<i64> {
    v.to_i64s().expect("fits in i64")
}

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| *x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Inward facet normals of the cone spanned by `rays`, found by testing the
/// normal of every `(n-1)`-subset of rays.
pub fn cone_facets(rays: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = rays[0].len();
    let mut out: Vec<Vec<i64>> = Vec::new();
    let idx: Vec<usize> = (0..rays.len()).collect();
    for subset in subsets(&idx, n - 1) {
        let rows: Vec<Vec<i64>> = subset.iter().map(|&i| rays[i].clone()).collect();
        let mut normal: Vec<i64> = (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| *x).collect())
                    .collect();
                if j % 2 == 0 {
                    det(&minor)
                } else {
                    -det(&minor)
                }
            })
            .collect();
        let g = normal.iter().fold(0, |g, &x| gcd(g, x));
        if g == 0 {
            continue;
        }
        normal.iter_mut().for_each(|x| *x /= g);
        let values: Vec<i64> = rays.iter().map(|r| dot(&normal, r)).collect();
        if values.iter().all(|&v| v <= 0) {
            normal.iter_mut().for_each(|x| *x = -*x);
        } else if !values.iter().all(|&v| v >= 0) {
            continue;
        }
        if !out.contains(&normal) {
            out.push(normal);
        }
    }
    out.sort();
    out
}

pub fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut with: Vec<Vec<usize>> = subsets(&items[1..], k - 1)
        .into_iter()
        .map(|mut s| {
            s.insert(0, items[0]);
            s
        })
        .collect();
    with.extend(subsets(&items[1..], k));
    with
}

/// Every lattice point of the box `[lo, hi]`.
pub fn box_points(lo: &[i64], hi: &[i64]) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for (a, b) in lo.iter().zip(hi) {
        out = out
            .into_iter()
            .flat_map(|p| {
                (*a..=*b).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// Lattice points of the cone with grading at most `h`, by a box scan over
/// the bounding box of the truncation `Conv{0, (h / g(r)) r}`.
pub fn truncated_cone_points(rays: &[Vec<i64>], facets: &[Vec<i64>], h: i64) -> Vec<Vec<i64>> {
    let n = rays[0].len();
    let grading: Vec<i64> = (0..n).map(|j| facets.iter().map(|f| f[j]).sum()).collect();
    let mut lo = vec![0i64; n];
    let mut hi = vec![0i64; n];
    for r in rays {
        let g = dot(&grading, r);
        for j in 0..n {
            let reach = (h * r[j]).div_euclid(g);
            lo[j] = lo[j].min(reach);
            hi[j] = hi[j].max(-((-h * r[j]).div_euclid(g)));
        }
    }
    box_points(&lo, &hi)
        .into_iter()
        .filter(|x| facets.iter().all(|f| dot(f, x) >= 0) && dot(&grading, x) <= h)
        .collect()
}
