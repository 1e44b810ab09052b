//! Locating `(γ, λ)` from pairs that sit exactly on the singular curve.
//!
//! A pair lies on the curve at `(γ, λ)` iff `γ = r_i(λ)` with
//! `r_i(λ) = ln s(λ x_{i+1}) / ln s(λ x_i)`. Pairs produced by the same
//! innovation all satisfy this at the true parameters, so the crossings
//! `r_i(λ) = r_j(λ)` pile up at one point. Any two curves cross somewhere;
//! three or more meeting at one point does not happen by accident with
//! continuous data.

use super::lambda_grid;
use super::likelihood::TieSets;
use crate::gedist::log1mexp;

/// Candidate parameters explaining `ties` on-curve pairs at once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Anchor {
    pub gamma: f64,
    pub lambda: f64,
    pub ties: usize,
}

const SCAN_PER_DECADE: usize = 16;
const CLUSTER_TOL: f64 = 1e-8;

fn ratio(x: f64, y: f64, lambda: f64) -> f64 {
    log1mexp(lambda * y) / log1mexp(lambda * x)
}

/// Finds the `(γ, λ)` shared by the most crossings and returns it when at
/// least `min_ties` pairs are on the curve there. Pairs with equal values
/// (on the `γ = 1` curve for every λ) are left to the equal-shape fit.
pub(crate) fn tie_anchor(data: &[f64], tol: f64, min_ties: usize) -> Option<Anchor> {
    let mean = data.iter().sum::<f64>() / data.len() as f64;
    let pairs: Vec<(f64, f64)> = data
        .windows(2)
        .filter(|w| w[0] != w[1])
        .map(|w| (w[0], w[1]))
        .collect();
    if pairs.len() < min_ties.max(2) {
        return None;
    }
    let grid = lambda_grid(0.01 / mean, 100.0 / mean, SCAN_PER_DECADE);
    let table: Vec<Vec<f64>> = pairs
        .iter()
        .map(|&(x, y)| grid.iter().map(|&l| ratio(x, y, l)).collect())
        .collect();

    // (ln λ, γ) of every crossing
    let mut roots: Vec<(f64, f64)> = Vec::new();
    for i in 0..pairs.len() {
        for j in i + 1..pairs.len() {
            for g in 0..grid.len() - 1 {
                let d0 = table[i][g] - table[j][g];
                let d1 = table[i][g + 1] - table[j][g + 1];
                if !(d0.is_finite() && d1.is_finite()) || d0 == 0.0 || (d0 < 0.0) == (d1 < 0.0) {
                    continue;
                }
                let f = |t: f64| {
                    let l = t.exp();
                    ratio(pairs[i].0, pairs[i].1, l) - ratio(pairs[j].0, pairs[j].1, l)
                };
                let (mut lo, mut hi) = (grid[g].ln(), grid[g + 1].ln());
                let lo_neg = d0 < 0.0;
                for _ in 0..200 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    let v = f(mid);
                    if v == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if (v < 0.0) == lo_neg {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                let t = 0.5 * (lo + hi);
                let gamma = ratio(pairs[i].0, pairs[i].1, t.exp());
                if gamma.is_finite() && gamma > 0.0 {
                    roots.push((t, gamma));
                }
            }
        }
    }
    if roots.len() < 3 {
        return None;
    }
    roots.sort_by(|a, b| a.0.total_cmp(&b.0));

    let mut best = (0, 0);
    let mut start = 0;
    for k in 0..roots.len() {
        while roots[k].0 - roots[start].0 > CLUSTER_TOL {
            start += 1;
        }
        let support = roots[start..=k]
            .iter()
            .filter(|r| (r.1 - roots[k].1).abs() <= CLUSTER_TOL * roots[k].1)
            .count();
        if support > best.0 {
            best = (support, k);
        }
    }
    // k ties produce k(k-1)/2 crossings
    if best.0 < 3 {
        return None;
    }
    let (t, gamma) = roots[best.1];
    let lambda = t.exp();
    let ties = TieSets::classify(data, gamma, lambda, tol).n0();
    (ties >= min_ties).then_some(Anchor { gamma, lambda, ties })
}
