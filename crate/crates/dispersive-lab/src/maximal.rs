//! Time-gridded maximal operators and their comparison scans.
//!
//! The maximal function `P* f(x) = sup_{0<t<1} |P^t_{a,γ} f(x)|` is realized
//! as a max over a [`TimeGrid`] — the supremum itself is not computable, but
//! the gridded max is monotone under refinement and the default geometric
//! ladder `t = 2^{-k}` resolves the `t → 0⁺` endpoint that controls
//! pointwise convergence. The argmax map `x ↦ t(x)` doubles as the
//! measurable time selection fed to the truncated variable-time propagator.

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{ensure, Result};
use crate::grid::{inverse_transform, sobolev_norm, GridFunction, GridSpec, SpectrumFunction};
use crate::numeric::pairwise_sum;
use crate::propagator::{dissipative_propagate, multiplier, EvolutionParams};

/// Strictly increasing time samples in the open interval (0,1).
#[derive(Debug, Clone)]
pub struct TimeGrid {
    samples: Vec<f64>,
}

impl TimeGrid {
    pub fn new(samples: Vec<f64>) -> Result<Self> {
        ensure(!samples.is_empty(), "time grid must be non-empty")?;
        ensure(
            samples.iter().all(|t| *t > 0.0 && *t < 1.0),
            "time samples must lie in (0,1)",
        )?;
        ensure(
            samples.windows(2).all(|w| w[1] > w[0]),
            "time samples must be strictly increasing",
        )?;
        Ok(TimeGrid { samples })
    }

    /// The default ladder `t_k = 2^{-k}`, `k = 1..=k_max`, stored ascending.
    pub fn geometric(k_max: u32) -> Self {
        let samples = (1..=k_max).rev().map(|k| 2f64.powi(-(k as i32))).collect();
        TimeGrid { samples }
    }

    pub fn samples(&self) -> &[f64] {
        &self.samples
    }

    pub fn len(&self) -> usize {
        self.samples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.samples.is_empty()
    }

    /// Sorted union with additional times (deduplicated).
    pub fn union(&self, extra: &[f64]) -> Result<Self> {
        let mut all: Vec<f64> = self
            .samples
            .iter()
            .cloned()
            .chain(extra.iter().cloned())
            .collect();
        all.sort_by(|a, b| a.partial_cmp(b).unwrap());
        all.dedup();
        TimeGrid::new(all)
    }
}

/// Real-valued function on a uniform grid (maximal functions, level data).
#[derive(Debug, Clone)]
pub struct RealGridFunction {
    pub x0: f64,
    pub dx: f64,
    pub values: Vec<f64>,
}

impl RealGridFunction {
    pub fn point(&self, j: usize) -> f64 {
        self.x0 + self.dx * j as f64
    }

    pub fn sup(&self) -> f64 {
        self.values.iter().cloned().fold(0.0, f64::max)
    }

    /// `(Σ v² dx)^{1/2}`, optionally restricted to `|x| < 1`.
    pub fn l2_norm(&self, local: bool) -> f64 {
        let sq: Vec<f64> = self
            .values
            .iter()
            .enumerate()
            .filter(|(j, _)| !local || self.point(*j).abs() < 1.0)
            .map(|(_, v)| v * v)
            .collect();
        (pairwise_sum(&sq) * self.dx).sqrt()
    }

    /// Linear interpolation at `x` (0 outside the grid).
    pub fn interpolate(&self, x: f64) -> f64 {
        let s = (x - self.x0) / self.dx;
        if s < 0.0 || s > (self.values.len() - 1) as f64 {
            return 0.0;
        }
        let j = (s.floor() as usize).min(self.values.len() - 2);
        let frac = s - j as f64;
        self.values[j] * (1.0 - frac) + self.values[j + 1] * frac
    }
}

/// Maximal function and its argmax time map.
pub struct MaximalFunction {
    pub sup: RealGridFunction,
    /// The time achieving the max at each grid point (earliest wins ties).
    pub argmax_t: Vec<f64>,
}

fn maximal_with(
    fhat: &SpectrumFunction,
    tg: &TimeGrid,
    grid: &GridSpec,
    mult: impl Fn(f64, f64) -> Complex64,
) -> Result<MaximalFunction> {
    ensure(!tg.is_empty(), "empty time grid")?;
    let mut sup = vec![0.0f64; grid.n];
    let mut argmax = vec![tg.samples()[0]; grid.n];
    for &t in tg.samples() {
        let u = inverse_transform(&fhat.multiplied(|xi| mult(xi, t)), grid)?;
        for j in 0..grid.n {
            let v = u.values[j].norm();
            if v > sup[j] {
                sup[j] = v;
                argmax[j] = t;
            }
        }
    }
    Ok(MaximalFunction {
        sup: RealGridFunction {
            x0: grid.x0,
            dx: grid.dx,
            values: sup,
        },
        argmax_t: argmax,
    })
}

/// `max_{t ∈ tg} |P^t_{a,γ} f(x)|` on `grid`, with the argmax map.
pub fn maximal_function(
    fhat: &SpectrumFunction,
    a: f64,
    gamma: f64,
    tg: &TimeGrid,
    grid: &GridSpec,
) -> Result<MaximalFunction> {
    ensure(a > 0.0 && gamma > 0.0, "a, gamma must be positive")?;
    maximal_with(fhat, tg, grid, |xi, t| {
        multiplier(xi, &EvolutionParams { a, gamma, t })
    })
}

/// Same max over the *undamped* group `e^{it(-Δ)^{a/2}}` — the comparison
/// object for the damped-versus-free ordering of the maximal norms.
pub fn maximal_function_undamped(
    fhat: &SpectrumFunction,
    a: f64,
    tg: &TimeGrid,
    grid: &GridSpec,
) -> Result<MaximalFunction> {
    ensure(a > 0.0, "a must be positive")?;
    maximal_with(fhat, tg, grid, |xi, t| {
        let r = (xi * xi).powf(a / 2.0);
        Complex64::from_polar(1.0, t * r)
    })
}

/// Discrete centered Hardy–Littlewood maximal function: the max over grid
/// radii of the average of |f| on `[x-r, x+r]`, with f extended by zero off
/// the grid. O(n²) via prefix sums.
pub fn hardy_littlewood(f: &GridFunction) -> RealGridFunction {
    let n = f.values.len();
    let mut prefix = vec![0.0f64; n + 1];
    for j in 0..n {
        prefix[j + 1] = prefix[j] + f.values[j].norm();
    }
    let values: Vec<f64> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut best = f.values[i].norm();
            for k in 1..n {
                let lo = i.saturating_sub(k);
                let hi = (i + k + 1).min(n);
                let avg = (prefix[hi] - prefix[lo]) / (2 * k + 1) as f64;
                if avg > best {
                    best = avg;
                }
            }
            best
        })
        .collect();
    RealGridFunction {
        x0: f.x0,
        dx: f.dx,
        values,
    }
}

/// `sup_{x, t ∈ t_list} |e^{-t(-Δ)^{a/2}} f(x)| / ℳf(x)`, the grid points
/// with `ℳf` below `10⁻¹²·max ℳf` excluded. Finite by kernel domination.
pub fn domination_check(
    fhat: &SpectrumFunction,
    a: f64,
    t_list: &[f64],
    grid: &GridSpec,
) -> Result<f64> {
    ensure(!t_list.is_empty(), "need at least one time")?;
    let f = inverse_transform(fhat, grid)?;
    let m = hardy_littlewood(&f);
    let floor = (m.sup() * 1e-12).max(1e-300);
    let mut sup = 0.0f64;
    for &t in t_list {
        let u = dissipative_propagate(fhat, t, a, grid)?;
        for j in 0..grid.n {
            if m.values[j] > floor {
                sup = sup.max(u.values[j].norm() / m.values[j]);
            }
        }
    }
    Ok(sup)
}

/// Lebesgue measure of the discrete super-level set `{g > λ}`.
pub fn level_set_measure(g: &RealGridFunction, lambda: f64) -> Result<f64> {
    ensure(lambda > 0.0, "level must be positive")?;
    Ok(g.values.iter().filter(|v| **v > lambda).count() as f64 * g.dx)
}

/// Domain of a ratio scan: the unit ball or the whole grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScanDomain {
    Local,
    Global,
}

/// One member of a ratio-scan family: a labelled spectrum with the time grid
/// and target grid on which its maximal function is resolved.
pub struct ScanItem {
    pub label: f64,
    pub fhat: SpectrumFunction,
    pub tg: TimeGrid,
    pub grid: GridSpec,
}

/// One row of the scan table.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub label: f64,
    pub maximal_l2: f64,
    pub hs_norm: f64,
    pub ratio: f64,
}

/// `‖P* f‖_{L²(domain)} / ‖f‖_{H^s}` across a family. Boundedness of the
/// ratios as the family parameter degenerates is the empirical face of the
/// maximal estimate; growth is the signature of a sub-threshold `s`.
pub fn strong_ratio_scan(
    items: &[ScanItem],
    a: f64,
    gamma: f64,
    s: f64,
    domain: ScanDomain,
) -> Result<Vec<ScanRow>> {
    let mut rows = Vec::with_capacity(items.len());
    for item in items {
        let hs = sobolev_norm(&item.fhat, s)?;
        ensure(hs > 0.0, "family member has zero Sobolev norm")?;
        let mf = maximal_function(&item.fhat, a, gamma, &item.tg, &item.grid)?;
        let l2 = mf.sup.l2_norm(domain == ScanDomain::Local);
        rows.push(ScanRow {
            label: item.label,
            maximal_l2: l2,
            hs_norm: hs,
            ratio: l2 / hs,
        });
    }
    Ok(rows)
}
