//! Counterexample families pinning the sharp Sobolev exponent.
//!
//! For `0 < a < 1`, `γ > 1` the family is a modulated bump
//!
//! ```text
//! f̂_ν(ξ) = ν g_ν(νξ + 1/ν),       g_ν = 1 on |η| < ½ ν^{(a-1)-a/γ},
//!                                  g_ν = 0 on |η| > ν^{(a-1)-a/γ},
//! ```
//!
//! i.e. a plateau bump of height ν centered at the high frequency `-1/ν²`.
//! Its Sobolev mass scales as `‖f_ν‖²_{H^s} ≍ ν^{a-4s-a/γ}`, while on the
//! designated interval `x ∈ [0, a ν^{2a/γ-2(a-1)}]` the time choice
//! `t(x) = x ν^{2(a-1)}/a` cancels the linear phase exactly and leaves
//! `|P^{t(x)} f_ν(x)| ≳ ν^{(a-1)-a/γ}`. Whether those two exponents balance
//! is precisely the threshold `s* = (a/4)(1 - 1/γ)`.
//!
//! For `a = 1` the band indicator `f̂_A = χ_{[-N, -N/2]}` plays the same
//! role: at `t = x ∈ [0, N^{-1/γ}]` the phase `xξ + t|ξ|` vanishes
//! identically on the band, leaving mass `≳ N e^{-x^γ N}`, against
//! `‖f_A‖_{H^s} ≍ N^{s+1/2}` and the threshold `s* = ½(1 - 1/γ)`.
//!
//! All scans report log-log regressions; one fixed C^∞ plateau profile (the
//! same mollifier shape used by the cutoff family) is used throughout so the
//! measured constants are reproducible.

use num_complex::Complex64;

use crate::cutoff::Bump;
use crate::error::{ensure, invalid, Result};
use crate::grid::{sobolev_norm, GridSpec, SpectrumFunction};
use crate::maximal::{ScanItem, TimeGrid};
use crate::numeric::next_pow2;
use crate::propagator::propagate_at;
use crate::regression::{fit_log_log, Regression};

/// Support radius `ν^{(a-1)-a/γ}` of the profile `g_ν` (in the η variable).
pub fn support_radius(nu: f64, a: f64, gamma: f64) -> f64 {
    nu.powf((a - 1.0) - a / gamma)
}

/// The designated interval `[0, a ν^{2a/γ - 2(a-1)}]` on which the maximal
/// function is coherently large.
pub fn designated_interval(nu: f64, a: f64, gamma: f64) -> (f64, f64) {
    (0.0, a * nu.powf(2.0 * a / gamma - 2.0 * (a - 1.0)))
}

/// The designated time `t(x) = x ν^{2(a-1)}/a` that cancels the linear phase.
pub fn designated_time(x: f64, nu: f64, a: f64) -> f64 {
    x * nu.powf(2.0 * (a - 1.0)) / a
}

/// The centered phase `F_{x,t,ν}(η) = xη/ν + t(|η/ν - 1/ν²|^a - ν^{-2a})`;
/// at the designated time it reduces to `(a-1)/2 · xη² + o(xη²)` and stays
/// below 1 in modulus over the support.
pub fn designated_phase(x: f64, t: f64, nu: f64, a: f64, eta: f64) -> f64 {
    let xi_abs = (eta / nu - 1.0 / (nu * nu)).abs();
    x * eta / nu + t * (xi_abs.powf(a) - nu.powf(-2.0 * a))
}

fn check_f_nu_regime(nu: f64, a: f64, gamma: f64) -> Result<()> {
    ensure(nu > 0.0 && nu < 1.0, "nu must lie in (0,1)")?;
    ensure(a > 0.0 && a < 1.0, "family needs 0 < a < 1")?;
    ensure(gamma > 1.0, "family needs gamma > 1")?;
    Ok(())
}

fn f_nu_on(
    nu: f64,
    a: f64,
    gamma: f64,
    width_scale: f64,
    xi0: f64,
    dxi: f64,
    n: usize,
) -> Result<SpectrumFunction> {
    let r = support_radius(nu, a, gamma) * width_scale;
    let profile = Bump::new(0.5 * r, r);
    SpectrumFunction::sample(xi0, dxi, n, |xi| {
        Complex64::new(nu * profile.eval(nu * xi + 1.0 / nu), 0.0)
    })
}

/// The spectrum `f̂_ν` sampled on a tight window around its support
/// (4096 midpoint samples). Plateau height is exactly ν.
pub fn build_f_nu(nu: f64, a: f64, gamma: f64) -> Result<SpectrumFunction> {
    build_f_nu_scaled(nu, a, gamma, 1.0)
}

/// Same construction with the profile stretched by `width_scale` (the
/// plateau fraction is kept at 1/2); doubling the width doubles `∫ g²`.
pub fn build_f_nu_scaled(
    nu: f64,
    a: f64,
    gamma: f64,
    width_scale: f64,
) -> Result<SpectrumFunction> {
    check_f_nu_regime(nu, a, gamma)?;
    ensure(width_scale > 0.0, "width scale must be positive")?;
    let r = support_radius(nu, a, gamma) * width_scale;
    let w = r / nu; // support half-width in ξ
    let center = -1.0 / (nu * nu);
    let n = 4096;
    let dxi = 2.0 * w / n as f64;
    f_nu_on(nu, a, gamma, width_scale, center - w + dxi / 2.0, dxi, n)
}

/// `f̂_ν` on a zero-padded window suitable for FFT maximal experiments: the
/// conjugate grid spans at least `[-x_half, x_half]` and resolves the
/// designated interval with `designated_samples` points.
pub fn build_f_nu_padded(
    nu: f64,
    a: f64,
    gamma: f64,
    x_half: f64,
    designated_samples: f64,
) -> Result<(SpectrumFunction, GridSpec)> {
    check_f_nu_regime(nu, a, gamma)?;
    ensure(x_half > 0.0 && designated_samples >= 1.0, "bad grid request")?;
    let r = support_radius(nu, a, gamma);
    let w = r / nu;
    let center = -1.0 / (nu * nu);
    let two_pi = 2.0 * std::f64::consts::PI;
    // dxi from the x-span, capped by the spectral feature scale
    let dxi = (two_pi / (2.0 * x_half)).min(w / 64.0);
    let (_, ell) = designated_interval(nu, a, gamma);
    let dx_target = ell / designated_samples;
    let n = next_pow2((2.2 * w / dxi).max(two_pi / (dxi * dx_target)));
    ensure(n <= 1 << 22, "padded grid too large at this nu")?;
    let xi0 = center - (n as f64 / 2.0) * dxi + dxi / 2.0;
    let fhat = f_nu_on(nu, a, gamma, 1.0, xi0, dxi, n)?;
    let grid = fhat.conjugate_grid();
    Ok((fhat, grid))
}

/// `‖f_ν‖²_{H^s}`, evaluated by quadrature on the sampled spectrum.
/// Scales like `ν^{a - 4s - a/γ}` as ν → 0.
pub fn f_nu_hs_norm_sq(nu: f64, a: f64, gamma: f64, s: f64) -> Result<f64> {
    let fhat = build_f_nu(nu, a, gamma)?;
    Ok(sobolev_norm(&fhat, s)?.powi(2))
}

/// Log-log regression of `‖f_ν‖²_{H^s}` against ν; the predicted slope is
/// `a - 4s - a/γ`.
pub fn hs_norm_scan(
    nus: &[f64],
    a: f64,
    gamma: f64,
    s: f64,
) -> Result<(Vec<(f64, f64)>, Regression, f64)> {
    ensure(nus.len() >= 2, "need at least two family members")?;
    let mut rows = Vec::with_capacity(nus.len());
    for &nu in nus {
        rows.push((nu, f_nu_hs_norm_sq(nu, a, gamma, s)?));
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let fit = fit_log_log(&xs, &ys)?;
    Ok((rows, fit, a - 4.0 * s - a / gamma))
}

/// Result of a designated-interval lower-bound scan.
#[derive(Debug, Clone)]
pub struct LowerBoundScan {
    /// (family parameter, min over the designated interval of P*).
    pub rows: Vec<(f64, f64)>,
    pub fit: Regression,
    pub predicted_slope: f64,
}

/// Minimum over the designated interval of the maximal function of `f_ν`,
/// per ν. Each sample point contributes its own designated time; passing a
/// time grid adjoins those times to the max (which can only raise the
/// minima — the pure witness keeps the cleanest ν-scaling). The predicted
/// slope of the minima against ν is `(a-1) - a/γ`.
pub fn lower_bound_scan_f_nu(
    nus: &[f64],
    a: f64,
    gamma: f64,
    tg: Option<&TimeGrid>,
    x_samples: usize,
) -> Result<LowerBoundScan> {
    ensure(nus.len() >= 2, "need at least two family members")?;
    ensure(x_samples >= 2, "need at least two interval samples")?;
    let mut rows = Vec::with_capacity(nus.len());
    for &nu in nus {
        let fhat = build_f_nu(nu, a, gamma)?;
        let (_, hi) = designated_interval(nu, a, gamma);
        ensure(hi > 0.0, "degenerate designated interval")?;
        let mut min_val = f64::INFINITY;
        for j in 0..x_samples {
            let x = hi * (j as f64 + 1.0) / x_samples as f64;
            let t_des = designated_time(x, nu, a);
            if !(t_des > 0.0 && t_des < 1.0) {
                return Err(invalid(format!(
                    "designated time {t_des} outside (0,1) at nu={nu}, x={x}"
                )));
            }
            let mut best = propagate_at(&fhat, a, gamma, t_des, x).norm();
            if let Some(tg) = tg {
                for &t in tg.samples() {
                    best = best.max(propagate_at(&fhat, a, gamma, t, x).norm());
                }
            }
            min_val = min_val.min(best);
        }
        rows.push((nu, min_val));
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let fit = fit_log_log(&xs, &ys)?;
    Ok(LowerBoundScan {
        rows,
        fit,
        predicted_slope: (a - 1.0) - a / gamma,
    })
}

/// The band indicator `f̂_A = χ_{[-N, -N/2]}` on 4096 midpoint samples.
/// Midpoint alignment makes `‖f_A‖²_{H⁰} = N/2` exact.
pub fn build_f_band(band: f64) -> Result<SpectrumFunction> {
    ensure(band >= 1.0, "band edge N must be at least 1")?;
    let n = 4096;
    let dxi = (band / 2.0) / n as f64;
    SpectrumFunction::sample(-band + dxi / 2.0, dxi, n, |_| Complex64::new(1.0, 0.0))
}

/// Exact value of `|P^t_{1,γ} f_A(x)|` at the designated time `t = x`, where
/// the phase vanishes on the band: `(e^{-x^γ N/2} - e^{-x^γ N})/x^γ`.
pub fn f_band_designated_value(band: f64, gamma: f64, x: f64) -> f64 {
    let e = x.powf(gamma);
    if e == 0.0 {
        return band / 2.0;
    }
    // exp_m1 keeps the difference stable when e·N underflows toward 0
    ((-e * band / 2.0).exp_m1() - (-e * band).exp_m1()) / e
}

/// Minimum over `x ∈ (0, N^{-1/γ}]` of the maximal function of `f_A`
/// (dispersion order a = 1); each sample uses its designated time `t = x`,
/// optionally maxed against a shared time grid. Predicted slope of the
/// minima against N is 1.
pub fn lower_bound_scan_f_band(
    bands: &[f64],
    gamma: f64,
    tg: Option<&TimeGrid>,
    x_samples: usize,
) -> Result<LowerBoundScan> {
    ensure(bands.len() >= 2, "need at least two family members")?;
    ensure(gamma > 1.0, "family needs gamma > 1")?;
    ensure(x_samples >= 2, "need at least two interval samples")?;
    let mut rows = Vec::with_capacity(bands.len());
    for &band in bands {
        let fhat = build_f_band(band)?;
        let hi = band.powf(-1.0 / gamma);
        let mut min_val = f64::INFINITY;
        for j in 0..x_samples {
            let x = hi * (j as f64 + 1.0) / x_samples as f64;
            let mut best = propagate_at(&fhat, 1.0, gamma, x, x).norm();
            if let Some(tg) = tg {
                for &t in tg.samples() {
                    best = best.max(propagate_at(&fhat, 1.0, gamma, t, x).norm());
                }
            }
            min_val = min_val.min(best);
        }
        rows.push((band, min_val));
    }
    let xs: Vec<f64> = rows.iter().map(|r| r.0).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.1).collect();
    let fit = fit_log_log(&xs, &ys)?;
    Ok(LowerBoundScan {
        rows,
        fit,
        predicted_slope: 1.0,
    })
}

/// Position of `s` relative to the sharp exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThresholdVerdict {
    BelowThreshold,
    AtThreshold,
    AboveThreshold,
}

impl ThresholdVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            ThresholdVerdict::BelowThreshold => "below-threshold",
            ThresholdVerdict::AtThreshold => "at-threshold",
            ThresholdVerdict::AboveThreshold => "above-threshold",
        }
    }
}

/// The sharp Sobolev exponent: `(a/4)(1-1/γ)` for `0 < a < 1` and
/// `½(1-1/γ)` for `a = 1`; requires `γ > 1`.
pub fn sharpness_threshold(a: f64, gamma: f64) -> Result<f64> {
    ensure(gamma > 1.0, "threshold stated for gamma > 1")?;
    ensure(a > 0.0 && a <= 1.0, "threshold stated for 0 < a <= 1")?;
    let base = 1.0 - 1.0 / gamma;
    if a < 1.0 {
        Ok(0.25 * a * base)
    } else {
        Ok(0.5 * base)
    }
}

/// Classify `s` against the sharp exponent.
pub fn sharpness_verdict(a: f64, gamma: f64, s: f64) -> Result<(ThresholdVerdict, f64)> {
    let thr = sharpness_threshold(a, gamma)?;
    let tol = 1e-12 * thr.abs().max(1.0);
    let verdict = if (s - thr).abs() <= tol {
        ThresholdVerdict::AtThreshold
    } else if s < thr {
        ThresholdVerdict::BelowThreshold
    } else {
        ThresholdVerdict::AboveThreshold
    };
    Ok((verdict, thr))
}

/// The contradiction quantity behind the sharpness argument:
/// `m(designated) · (ν^{(a-1)-a/γ})² / ‖f_ν‖²_{H^s}` with the measured
/// Sobolev mass. It grows without bound as ν → 0 exactly when `s` is below
/// the threshold.
pub fn weak_ratio_exhibit(nus: &[f64], a: f64, gamma: f64, s: f64) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::with_capacity(nus.len());
    for &nu in nus {
        let (_, ell) = designated_interval(nu, a, gamma);
        let level = support_radius(nu, a, gamma);
        let hs_sq = f_nu_hs_norm_sq(nu, a, gamma, s)?;
        out.push((nu, ell * level * level / hs_sq));
    }
    Ok(out)
}

/// One row of the counterexample ratio scan.
#[derive(Debug, Clone)]
pub struct RatioRow {
    pub nu: f64,
    pub maximal_l2: f64,
    pub hs_norm: f64,
    pub ratio: f64,
}

/// `‖P* f_ν‖_{L²(B(0,1))} / ‖f_ν‖_{H^s}` across the family, with the maximal
/// function realized per grid point as the max over the geometric ladder
/// *and* the point's own designated time `t(x)` — the variable-time
/// selection that resolves the coherent plateau (a fixed, x-independent time
/// grid only sees it in `x`-windows of width ~ν/ν^{(a-1)-a/γ-1}, far below
/// any affordable resolution).
pub fn counterexample_ratio_scan(
    nus: &[f64],
    a: f64,
    gamma: f64,
    s: f64,
    k_time: u32,
) -> Result<Vec<RatioRow>> {
    use crate::maximal::maximal_function;
    let tg = TimeGrid::geometric(k_time);
    let mut rows = Vec::with_capacity(nus.len());
    for &nu in nus {
        let (fhat, grid) = build_f_nu_padded(nu, a, gamma, 1.3, 8.0)?;
        let tight = build_f_nu(nu, a, gamma)?;
        let hs = sobolev_norm(&tight, s)?;
        let mut mf = maximal_function(&fhat, a, gamma, &tg, &grid)?;
        let (_, ell) = designated_interval(nu, a, gamma);
        for j in 0..grid.n {
            let x = grid.point(j);
            if x <= 0.0 || x > ell {
                continue;
            }
            let t = designated_time(x, nu, a);
            if t > 0.0 && t < 1.0 {
                let v = propagate_at(&tight, a, gamma, t, x).norm();
                if v > mf.sup.values[j] {
                    mf.sup.values[j] = v;
                }
            }
        }
        let l2 = mf.sup.l2_norm(true);
        rows.push(RatioRow {
            nu,
            maximal_l2: l2,
            hs_norm: hs,
            ratio: l2 / hs,
        });
    }
    Ok(rows)
}

/// Scan items (spectrum + matched grids) for a ν-family, with the designated
/// times adjoined to the geometric time ladder so the coherence window is
/// at least partially sampled.
pub fn build_scan_items(
    nus: &[f64],
    a: f64,
    gamma: f64,
    k_geometric: u32,
    designated_samples: usize,
) -> Result<Vec<ScanItem>> {
    let mut items = Vec::with_capacity(nus.len());
    for &nu in nus {
        let (fhat, grid) = build_f_nu_padded(nu, a, gamma, 1.3, 8.0)?;
        let (_, hi) = designated_interval(nu, a, gamma);
        let extra: Vec<f64> = (0..designated_samples)
            .map(|j| {
                let x = hi * (j as f64 + 1.0) / designated_samples as f64;
                designated_time(x, nu, a)
            })
            .filter(|t| *t > 0.0 && *t < 1.0)
            .collect();
        let tg = TimeGrid::geometric(k_geometric).union(&extra)?;
        items.push(ScanItem {
            label: nu,
            fhat,
            tg,
            grid,
        });
    }
    Ok(items)
}
