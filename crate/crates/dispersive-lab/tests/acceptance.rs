//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! with the measured quantities (run with `--nocapture` to see all lines).
//!
//! Expected values come from closed forms (complex Gaussian integrals, band
//! integrals, the uniform-measure energy 2/((1-s)(2-s))), from arithmetic on
//! the exponent formulas, or from scaling-law regressions whose predicted
//! slopes are pinned a priori. Tolerances are fixed here, not calibrated
//! post hoc.

use std::time::Instant;

use dispersive_lab::cutoff::CutoffFamily;
use dispersive_lab::dimension::{
    box_dimension, dim_bound_exponent, divergence_probe, dyadic_scales, energy,
};
use dispersive_lab::grid::{inverse_transform, GridSpec, SpectrumFunction};
use dispersive_lab::kernels::{lambda_l1_matched_sweep, poisson_bound_ratio, poisson_kernel};
use dispersive_lab::maximal::{domination_check, TimeGrid};
use dispersive_lab::measure::DiscreteMeasure;
use dispersive_lab::propagator::{propagate, EvolutionParams};
use dispersive_lab::regression::fit_log_log;
use dispersive_lab::sharpness::{
    build_f_nu_padded, counterexample_ratio_scan, designated_interval, designated_time,
    hs_norm_scan, lower_bound_scan_f_band, lower_bound_scan_f_nu, sharpness_threshold,
    support_radius,
};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const PI: f64 = std::f64::consts::PI;

fn gaussian_spectrum(l: f64, n: usize) -> (SpectrumFunction, GridSpec) {
    let grid = GridSpec::centered(l, n).unwrap();
    let dxi = 2.0 * PI / (n as f64 * grid.dx);
    let fhat = SpectrumFunction::sample(-(n as f64 / 2.0) * dxi, dxi, n, |xi| {
        Complex64::new((-xi * xi).exp(), 0.0)
    })
    .unwrap();
    (fhat, grid)
}

/// Criterion 1 — the complex-Gaussian closed form at a = 2, γ = 1.
#[test]
fn criterion_01_gaussian_oracle() {
    let (fhat, grid) = gaussian_spectrum(25.6, 4096);
    let mut ok = true;
    for t in [0.1, 0.25, 0.5] {
        let start = Instant::now();
        let p = EvolutionParams::new(2.0, 1.0, t).unwrap();
        let got = propagate(&fhat, &p, &grid).unwrap();
        let elapsed = start.elapsed();
        let c = Complex64::new(1.0 + t, -t);
        let mut diff = 0.0f64;
        let mut scale = 0.0f64;
        for (j, x) in grid.points().enumerate() {
            if x.abs() <= 10.0 {
                let want = (Complex64::new(PI, 0.0) / c).sqrt() * (-x * x / (4.0 * c)).exp();
                diff = diff.max((got.values[j] - want).norm());
                scale = scale.max(want.norm());
            }
        }
        let rel = diff / scale;
        let pass = rel <= 1e-8 && elapsed.as_secs_f64() < 1.0;
        ok &= pass;
        println!(
            "acceptance 1 (t = {t}): rel error {rel:.3e} (<= 1e-8), runtime {elapsed:?} (< 1 s) -> {}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    assert!(ok);
}

/// Criterion 2 — the Poisson-type bound ratio is finite and stable under
/// 2x refinement in both t and x.
#[test]
fn criterion_02_poisson_bound_ratio() {
    let start = Instant::now();
    let sweep = |t_count: usize, x_count: usize| -> f64 {
        let mut sup = 0.0f64;
        for a in [0.5, 1.0, 1.5, 2.0] {
            for &t in &dispersive_lab::numeric::geomspace(1e-3, 1.0, t_count) {
                for j in 0..x_count {
                    let x = 50.0 * j as f64 / (x_count - 1) as f64;
                    sup = sup.max(poisson_bound_ratio(x, t, a).unwrap());
                }
            }
        }
        sup
    };
    let base = sweep(20, 200);
    let refined = sweep(40, 400);
    let change = (refined - base).abs() / base;
    let elapsed = start.elapsed();
    let pass = base.is_finite() && change < 0.10 && elapsed.as_secs_f64() < 120.0;
    println!(
        "acceptance 2: sup ratio {base:.4}, refined {refined:.4}, change {:.2}% (< 10%), runtime {elapsed:?} (< 2 min) -> {}",
        100.0 * change,
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// Criterion 3 — the kernel scaling identity on 100 random samples. The
/// rescaled abscissa X = x t^{-1/a} is drawn in [-4, 4], keeping both sides
/// well above the two-branch cancellation floor so a relative comparison is
/// meaningful.
#[test]
fn criterion_03_scaling_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let a: f64 = rng.gen_range(0.5..2.0);
        let t: f64 = rng.gen_range(0.2..0.95);
        let x = rng.gen_range(-4.0..4.0f64) * t.powf(1.0 / a);
        let lhs = poisson_kernel(x, t, a).unwrap();
        let s = t.powf(-1.0 / a);
        let rhs = poisson_kernel(x * s, 1.0, a).unwrap() * s;
        worst = worst.max((lhs - rhs).norm() / rhs.norm());
    }
    let pass = worst <= 1e-8;
    println!(
        "acceptance 3: worst rel error over 100 samples {worst:.3e} (<= 1e-8) -> {}",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass);
}

/// Criterion 4 — dyadic summability crossover at α* = 1/8 for (a,γ) = (½,2):
/// per-block log-slope of the dissipation-matched worst case over the last
/// eight dyadic scales, M up to 2^10.
#[test]
fn criterion_04_summability_crossover() {
    let start = Instant::now();
    let cutoffs = CutoffFamily::standard();
    let slope_at = |alpha: f64| {
        let rows = lambda_l1_matched_sweep(0.5, 2.0, alpha, &cutoffs, 1024.0, &[0.5, 1.0, 2.0])
            .unwrap();
        let tail = &rows[rows.len() - 8..];
        fit_log_log(
            &tail.iter().map(|r| r.0).collect::<Vec<_>>(),
            &tail.iter().map(|r| r.1).collect::<Vec<_>>(),
        )
        .unwrap()
        .slope
    };
    let s_high = slope_at(0.2);
    let s_low = slope_at(0.05);
    let elapsed = start.elapsed();
    let pass_high = s_high <= -0.05;
    let pass_low = s_low >= 0.05;
    let pass_time = elapsed.as_secs_f64() < 300.0;
    println!(
        "acceptance 4: slope(alpha=0.20) = {s_high:+.4} (<= -0.05) -> {}",
        if pass_high { "PASS" } else { "FAIL" }
    );
    println!(
        "acceptance 4: slope(alpha=0.05) = {s_low:+.4} (>= +0.05) -> {} \
         (desk-scale note: the oscillatory gain reaches its asymptotic rate only near M ~ 2^18)",
        if pass_low { "PASS" } else { "FAIL" }
    );
    println!("acceptance 4: runtime {elapsed:?} (< 5 min) -> {}", if pass_time { "PASS" } else { "FAIL" });
    assert!(pass_high && pass_low && pass_time);
}

/// Criterion 5 — Sobolev-mass scaling of the counterexample family.
#[test]
fn criterion_05_hs_norm_scaling() {
    let nus: Vec<f64> = (3..=10).map(|k| 2f64.powi(-k)).collect();
    let mut ok = true;
    for s in [0.03, 0.1] {
        let (_, fit, predicted) = hs_norm_scan(&nus, 0.5, 2.0, s).unwrap();
        let dev = (fit.slope - predicted).abs() / predicted.abs();
        let pass = dev <= 0.05 && fit.r2 >= 0.99;
        ok &= pass;
        println!(
            "acceptance 5 (s = {s}): slope {:+.4} vs {predicted:+.4} (dev {:.2}% <= 5%), R2 = {:.5} (>= 0.99) -> {}",
            fit.slope,
            100.0 * dev,
            fit.r2,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    assert!(ok);
}

/// Criterion 6 — designated-interval lower bounds: the bump family's minima
/// scale like ν^{(a-1)-a/γ} = ν^{-3/4}, the band family's like N, with the
/// concrete floor (N/2)e^{-1} at N = 64.
#[test]
fn criterion_06_lower_bounds() {
    let nus: Vec<f64> = (3..=10).map(|k| 2f64.powi(-k)).collect();
    let scan = lower_bound_scan_f_nu(&nus, 0.5, 2.0, None, 17).unwrap();
    let dev = (scan.fit.slope - scan.predicted_slope).abs() / scan.predicted_slope.abs();
    let pass_nu = dev <= 0.10;
    println!(
        "acceptance 6: f_nu minima slope {:+.4} vs {:+.4} (dev {:.2}% <= 10%) -> {}",
        scan.fit.slope,
        scan.predicted_slope,
        100.0 * dev,
        if pass_nu { "PASS" } else { "FAIL" }
    );

    let bands: Vec<f64> = (4..=10).map(|k| 2f64.powi(k)).collect();
    let band_scan = lower_bound_scan_f_band(&bands, 2.0, None, 17).unwrap();
    let pass_band = (band_scan.fit.slope - 1.0).abs() <= 0.05;
    println!(
        "acceptance 6: f_A minima slope {:+.4} (1.00 +/- 0.05) -> {}",
        band_scan.fit.slope,
        if pass_band { "PASS" } else { "FAIL" }
    );

    let floor = 32.0 * (-1.0f64).exp();
    let at_64 = band_scan
        .rows
        .iter()
        .find(|r| (r.0 - 64.0).abs() < 1e-9)
        .unwrap()
        .1;
    let pass_floor = at_64 >= floor;
    println!(
        "acceptance 6: f_A minimum at N = 64 is {at_64:.4} (>= (N/2)e^-1 = {floor:.4}) -> {}",
        if pass_floor { "PASS" } else { "FAIL" }
    );
    assert!(pass_nu && pass_band && pass_floor);
}

/// Criterion 7 — maximal-to-Sobolev ratios across the family: a factor-2
/// band just above threshold, monotone growth by >= 4x just below.
#[test]
fn criterion_07_ratio_scan() {
    let (a, gamma) = (0.5, 2.0);
    let thr = sharpness_threshold(a, gamma).unwrap();
    let nus: Vec<f64> = (3..=10).map(|k| 2f64.powi(-k)).collect();

    let above = counterexample_ratio_scan(&nus, a, gamma, thr + 0.05, 20).unwrap();
    let ratios: Vec<f64> = above.iter().map(|r| r.ratio).collect();
    let band = ratios.iter().cloned().fold(0.0f64, f64::max)
        / ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let pass_band = band <= 2.0;
    println!(
        "acceptance 7 (s = threshold+0.05): ratios {:?}, band factor {band:.3} (<= 2) -> {}",
        ratios.iter().map(|r| (r * 1e3).round() / 1e3).collect::<Vec<_>>(),
        if pass_band { "PASS" } else { "FAIL" }
    );

    let below = counterexample_ratio_scan(&nus, a, gamma, thr - 0.03, 20).unwrap();
    let ratios: Vec<f64> = below.iter().map(|r| r.ratio).collect();
    let monotone = ratios.windows(2).all(|w| w[1] >= w[0]);
    let growth = ratios.last().unwrap() / ratios.first().unwrap();
    let pass_growth = monotone && growth >= 4.0;
    println!(
        "acceptance 7 (s = threshold-0.03): ratios {:?}, growth {growth:.3} (monotone, >= 4x) -> {} \
         (desk-scale note: the t->0 bulk |f_nu|_L2 ~ nu^(1/8) dominates the coherent plateau until nu ~ 2^-16)",
        ratios.iter().map(|r| (r * 1e3).round() / 1e3).collect::<Vec<_>>(),
        if pass_growth { "PASS" } else { "FAIL" }
    );
    assert!(pass_band && pass_growth);
}

/// Criterion 8 — pointwise convergence for Gaussian data along t = 2^{-k}:
/// sup errors decrease monotonically and fall below 1e-6 by k = 20.
#[test]
fn criterion_08_convergence() {
    // standard Gaussian density: f(x) = (2π)^{-1/2} e^{-x²/2}
    let n = 4096;
    let grid = GridSpec::centered(25.6, n).unwrap();
    let dxi = 2.0 * PI / (n as f64 * grid.dx);
    let fhat = SpectrumFunction::sample(-(n as f64 / 2.0) * dxi, dxi, n, |xi| {
        Complex64::new((2.0 * PI).recip() * (-xi * xi / 2.0).exp(), 0.0)
    })
    .unwrap();
    let f = inverse_transform(&fhat, &grid).unwrap();
    let mut ok = true;
    for (a, gamma) in [(0.5, 2.0), (1.0, 2.0), (0.5, 0.5)] {
        let mut monotone = true;
        let mut prev = f64::INFINITY;
        let mut last = f64::NAN;
        for k in 1..=20 {
            let t = 2f64.powi(-k);
            let u = propagate(&fhat, &EvolutionParams::new(a, gamma, t).unwrap(), &grid).unwrap();
            let err = u
                .values
                .iter()
                .zip(&f.values)
                .map(|(x, y)| (x - y).norm())
                .fold(0.0f64, f64::max);
            if err > prev * (1.0 + 1e-12) {
                monotone = false;
            }
            prev = err;
            last = err;
        }
        let pass = monotone && last < 1e-6;
        ok &= pass;
        let note = if gamma < 1.0 {
            "  (gamma < 1: the rate is t^gamma, so the k = 20 error floor is ~3e-4)"
        } else {
            ""
        };
        println!(
            "acceptance 8 (a = {a}, gamma = {gamma}): monotone = {monotone}, err(k=20) = {last:.3e} (< 1e-6) -> {}{note}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    assert!(ok);
}

/// Criterion 9 — the Riesz-energy oracles: exact two-atom value and the
/// uniform-measure closed form 8/3 at s = 1/2.
#[test]
fn criterion_09_energy_oracle() {
    let d = 0.4;
    let two = energy(&DiscreteMeasure::two_atoms(d).unwrap(), 0.5)
        .unwrap()
        .value()
        .unwrap();
    let exact = d.powf(-0.5) / 2.0;
    let pass_two = (two - exact).abs() <= 1e-12;
    println!(
        "acceptance 9: two-atom energy {two:.15} vs {exact:.15} -> {}",
        if pass_two { "PASS" } else { "FAIL" }
    );

    let want = 8.0 / 3.0;
    let e4096 = energy(&DiscreteMeasure::uniform_random(4096, 1).unwrap(), 0.5)
        .unwrap()
        .value()
        .unwrap();
    let e8192 = energy(&DiscreteMeasure::uniform_random(8192, 1).unwrap(), 0.5)
        .unwrap()
        .value()
        .unwrap();
    let rel_4096 = (e4096 - want).abs() / want;
    let rel_8192 = (e8192 - want).abs() / want;
    let pass_uniform = rel_4096 <= 0.01 && rel_8192 < rel_4096;
    println!(
        "acceptance 9: uniform 4096 atoms rel err {rel_4096:.3e} (<= 1%), 8192 atoms {rel_8192:.3e} (shrinks) -> {}",
        if pass_uniform { "PASS" } else { "FAIL" }
    );
    assert!(pass_two && pass_uniform);
}

/// Criterion 10 — dimension probes: interval, point and Cantor calibration,
/// the empty Schwartz probe, and the counterexample probe against the
/// regime-(ii) bound.
#[test]
fn criterion_10_dimension_probes() {
    let interval: Vec<f64> = (0..4096).map(|k| k as f64 / 4096.0).collect();
    let d_int = box_dimension(&interval, &dyadic_scales(2, 9)).unwrap().slope;
    let pass_int = (d_int - 1.0).abs() <= 0.05;
    println!(
        "acceptance 10: interval box dim {d_int:.4} (1.00 +/- 0.05) -> {}",
        if pass_int { "PASS" } else { "FAIL" }
    );

    let d_pt = box_dimension(&[0.37], &dyadic_scales(2, 9)).unwrap().slope;
    let pass_pt = d_pt.abs() <= 0.05;
    println!(
        "acceptance 10: point box dim {d_pt:.4} (0.00 +/- 0.05) -> {}",
        if pass_pt { "PASS" } else { "FAIL" }
    );

    let cantor: Vec<f64> = DiscreteMeasure::cantor(8)
        .unwrap()
        .atoms()
        .iter()
        .map(|a| a.position)
        .collect();
    let d_c = box_dimension(&cantor, &dyadic_scales(2, 10)).unwrap().slope;
    let want = 2f64.ln() / 3f64.ln();
    let pass_c = (d_c - want).abs() <= 0.03;
    println!(
        "acceptance 10: depth-8 Cantor box dim {d_c:.4} ({want:.4} +/- 0.03) -> {}",
        if pass_c { "PASS" } else { "FAIL" }
    );

    let (fhat, grid) = gaussian_spectrum(12.8, 1024);
    let tiny = TimeGrid::new(vec![2f64.powi(-22), 2f64.powi(-21), 2f64.powi(-20)]).unwrap();
    let pts = divergence_probe(&fhat, 0.5, 2.0, 1e-3, &tiny, &grid).unwrap();
    let pass_schwartz = pts.is_empty();
    println!(
        "acceptance 10: Schwartz divergence probe has {} points (expect 0) -> {}",
        pts.len(),
        if pass_schwartz { "PASS" } else { "FAIL" }
    );

    let (a, gamma, s) = (0.5, 2.0, 0.2);
    let bound = dim_bound_exponent(a, gamma, s).unwrap();
    let mut pass_probe = true;
    for k in [4, 5] {
        let nu = 2f64.powi(-k);
        let (fnu, fine) = build_f_nu_padded(nu, a, gamma, 1.3, 16.0).unwrap();
        let (_, ell) = designated_interval(nu, a, gamma);
        let times: Vec<f64> = (1..=33)
            .map(|j| designated_time(ell * j as f64 / 33.0, nu, a))
            .filter(|t| *t > 0.0 && *t < 1.0)
            .collect();
        let tg = TimeGrid::new(times).unwrap();
        let lambda = 0.1 * support_radius(nu, a, gamma);
        let pts = divergence_probe(&fnu, a, gamma, lambda, &tg, &fine).unwrap();
        let dim = box_dimension(&pts, &dyadic_scales(1, 6)).unwrap().slope;
        let pass = !pts.is_empty() && dim <= bound + 0.15;
        pass_probe &= pass;
        println!(
            "acceptance 10: f_nu probe (nu = 2^-{k}) box dim {dim:.4} <= bound {bound:.4} + 0.15 -> {}",
            if pass { "PASS" } else { "FAIL" }
        );
    }
    assert!(pass_int && pass_pt && pass_c && pass_schwartz && pass_probe);
}

/// Criterion 11 — kernel domination by the Hardy–Littlewood maximal
/// function: finite sup ratio, stable under refinement.
#[test]
fn criterion_11_domination() {
    let mut ok = true;
    for a in [0.5, 1.0, 2.0] {
        let ratio = |n: usize, k_max: i32| {
            let (fhat, grid) = gaussian_spectrum(25.6, n);
            let ts: Vec<f64> = (1..=k_max).map(|k| 2f64.powi(-k)).collect();
            domination_check(&fhat, a, &ts, &grid).unwrap()
        };
        let base = ratio(2048, 8);
        let refined = ratio(4096, 10);
        let change = (refined - base).abs() / base;
        let pass = base.is_finite() && change <= 0.10;
        ok &= pass;
        println!(
            "acceptance 11 (a = {a}): sup ratio {base:.4}, refined {refined:.4}, change {:.2}% (<= 10%) -> {}",
            100.0 * change,
            if pass { "PASS" } else { "FAIL" }
        );
    }
    assert!(ok);
}
