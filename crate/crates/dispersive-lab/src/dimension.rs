//! Riesz energies, weighted maximal integrals, divergence-set probes, and a
//! box-counting dimension estimator.
//!
//! Hausdorff dimension is not computable from finite data; the crate uses the
//! upper box-counting dimension, which dominates it, so empirical checks of
//! the form "measured dimension ≤ predicted bound + tolerance" remain valid
//! consistency checks (never proofs). Energies are off-diagonal pair sums —
//! the continuum `I_s(μ) = ∬|x-y|^{-s} dμ dμ` has no diagonal issue, the
//! discretization does, and coincident atoms are flagged as infinite energy.

use rayon::prelude::*;

use crate::error::{ensure, Error, Result};
use crate::grid::{inverse_transform, GridSpec, SpectrumFunction};
use crate::maximal::{maximal_function, TimeGrid};
use crate::measure::DiscreteMeasure;
use crate::numeric::pairwise_sum;
use crate::propagator::propagate;
use crate::propagator::EvolutionParams;
use crate::regression::{fit_line, Regression};

/// Value of a discrete s-energy: finite, or the coincident-atom flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Energy {
    Finite(f64),
    Infinite,
}

impl Energy {
    pub fn is_finite(&self) -> bool {
        matches!(self, Energy::Finite(_))
    }

    pub fn value(&self) -> Option<f64> {
        match self {
            Energy::Finite(v) => Some(*v),
            Energy::Infinite => None,
        }
    }
}

/// `I_s(μ) = Σ_{i≠j} w_i w_j |x_i - x_j|^{-s}` (ordered pairs), `s > 0`.
/// A single atom has no off-diagonal pair and is flagged infinite, as are
/// coincident atoms.
pub fn energy(mu: &DiscreteMeasure, s: f64) -> Result<Energy> {
    ensure(s > 0.0 && s.is_finite(), "energy order s must be positive")?;
    let atoms = mu.atoms();
    let n = atoms.len();
    if n < 2 {
        return Ok(Energy::Infinite);
    }
    // row sums collected first, then reduced in index order: deterministic
    // under any thread count
    let rows: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut acc = 0.0f64;
            for j in 0..n {
                if i == j {
                    continue;
                }
                let d = (atoms[i].position - atoms[j].position).abs();
                if d == 0.0 {
                    return f64::INFINITY;
                }
                acc += atoms[i].weight * atoms[j].weight * d.powf(-s);
            }
            acc
        })
        .collect();
    if rows.iter().any(|r| !r.is_finite()) {
        return Ok(Energy::Infinite);
    }
    Ok(Energy::Finite(pairwise_sum(&rows)))
}

/// `∫ P*f dμ ≈ Σ_i w_i · P*f(x_i)`, the maximal function resolved on `grid`
/// and linearly interpolated at the atoms. Requires spt μ ⊂ B(0,1) and a
/// grid covering the unit ball.
pub fn weighted_maximal_integral(
    fhat: &SpectrumFunction,
    a: f64,
    gamma: f64,
    tg: &TimeGrid,
    mu: &DiscreteMeasure,
    grid: &GridSpec,
) -> Result<f64> {
    ensure(
        mu.supported_in_unit_ball(),
        "measure must be supported in the open unit ball",
    )?;
    ensure(
        grid.x0 <= -1.0 && grid.point(grid.n - 1) >= 1.0,
        "grid must cover the unit ball",
    )?;
    let mf = maximal_function(fhat, a, gamma, tg, grid)?;
    let terms: Vec<f64> = mu
        .atoms()
        .iter()
        .map(|atom| atom.weight * mf.sup.interpolate(atom.position))
        .collect();
    Ok(pairwise_sum(&terms))
}

/// The dimension bound for the divergence set of `P^t_{a,γ}` on `H^s` data:
///
/// * (i) `a ≠ 1` with `γ ∈ (0,1]`, `s ∈ (0,½]`, or `γ > 1`, `s ∈ [¼,½]`:
///   bound `1-2s`;
/// * (ii) `0 < a < 1`, `γ > 1`, `s ∈ ((a/4)(1-1/γ), ¼)`:
///   bound `σ = 1-2s + a(4s-1)(γ-1)/(2[(a-1)γ-a])`;
/// * (iii) `a > 1`, `γ ∈ (1, a/(a-1))`, same `s` window: the same σ;
/// * (iv) `a = 1`, `γ > 0`, `s ∈ ((½(1-1/γ))₊, ½]`:
///   bound `ϱ = max{1-2s, γ(1-2s)}`.
///
/// Clamped to [0,1]; parameters outside every regime are rejected.
pub fn dim_bound_exponent(a: f64, gamma: f64, s: f64) -> Result<f64> {
    ensure(a > 0.0 && gamma > 0.0, "a, gamma must be positive")?;
    ensure(s > 0.0 && s <= 0.5, "bounds are stated for s in (0, 1/2]")?;
    let unsupported =
        || Error::UnsupportedRegime(format!("no stated dimension bound at (a,γ,s) = ({a},{gamma},{s})"));

    let clamp = |v: f64| v.clamp(0.0, 1.0);
    if (a - 1.0).abs() < 1e-12 {
        // regime (iv)
        let thr = (0.5 * (1.0 - 1.0 / gamma)).max(0.0);
        if s > thr {
            let q = 1.0 - 2.0 * s;
            return Ok(clamp(q.max(gamma * q)));
        }
        return Err(unsupported());
    }
    if gamma <= 1.0 {
        return Ok(clamp(1.0 - 2.0 * s)); // regime (i), dissipative side
    }
    // γ > 1
    if s >= 0.25 {
        return Ok(clamp(1.0 - 2.0 * s)); // regime (i), dispersive side
    }
    let thr = 0.25 * a * (1.0 - 1.0 / gamma);
    let in_window = s > thr && s < 0.25;
    if a < 1.0 && in_window {
        let sigma = 1.0 - 2.0 * s + a * (4.0 * s - 1.0) * (gamma - 1.0)
            / (2.0 * ((a - 1.0) * gamma - a));
        return Ok(clamp(sigma)); // regime (ii)
    }
    if a > 1.0 && gamma < a / (a - 1.0) && in_window {
        let sigma = 1.0 - 2.0 * s + a * (4.0 * s - 1.0) * (gamma - 1.0)
            / (2.0 * ((a - 1.0) * gamma - a));
        return Ok(clamp(sigma)); // regime (iii)
    }
    Err(unsupported())
}

/// Grid points where `max_{t ∈ tg_small} |P^t f(x) - f(x)| > λ` — an outer
/// approximation of the divergence set at resolution `(dx, max tg_small)`.
pub fn divergence_probe(
    fhat: &SpectrumFunction,
    a: f64,
    gamma: f64,
    lambda: f64,
    tg_small: &TimeGrid,
    grid: &GridSpec,
) -> Result<Vec<f64>> {
    ensure(lambda > 0.0, "level must be positive")?;
    let f = inverse_transform(fhat, grid)?;
    let mut disc = vec![0.0f64; grid.n];
    for &t in tg_small.samples() {
        let u = propagate(fhat, &EvolutionParams::new(a, gamma, t)?, grid)?;
        for j in 0..grid.n {
            disc[j] = disc[j].max((u.values[j] - f.values[j]).norm());
        }
    }
    Ok((0..grid.n)
        .filter(|j| disc[*j] > lambda)
        .map(|j| grid.point(j))
        .collect())
}

/// Number of boxes `[kδ, (k+1)δ)` hit by the point set.
pub fn box_count(points: &[f64], delta: f64) -> usize {
    let mut boxes: Vec<i64> = points
        .iter()
        .map(|x| (x / delta).floor() as i64)
        .collect();
    boxes.sort_unstable();
    boxes.dedup();
    boxes.len()
}

/// Least-squares slope of `log N(δ)` against `log(1/δ)` over the given
/// scales — an upper box-counting dimension estimate.
pub fn box_dimension(points: &[f64], scales: &[f64]) -> Result<Regression> {
    ensure(!points.is_empty(), "box dimension of an empty set is undefined")?;
    ensure(scales.len() >= 2, "need at least two scales")?;
    ensure(
        scales.iter().all(|d| *d > 0.0 && d.is_finite()),
        "scales must be positive",
    )?;
    let xs: Vec<f64> = scales.iter().map(|d| (1.0 / d).ln()).collect();
    let ys: Vec<f64> = scales
        .iter()
        .map(|d| (box_count(points, *d) as f64).ln())
        .collect();
    fit_line(&xs, &ys)
}

/// Dyadic scales `2^{-k}` for `k = lo..=hi`.
pub fn dyadic_scales(lo: u32, hi: u32) -> Vec<f64> {
    (lo..=hi).map(|k| 2f64.powi(-(k as i32))).collect()
}
