//! Maximal operators: P*, Hardy–Littlewood domination, level sets, and the
//! maximal-to-Sobolev ratio scan.
//!
//! ```bash
//! cargo run --release --example maximal_scan
//! ```

use dispersive_lab::grid::{GridSpec, SpectrumFunction};
use dispersive_lab::maximal::{
    domination_check, hardy_littlewood, level_set_measure, maximal_function,
    maximal_function_undamped, TimeGrid,
};
use dispersive_lab::sharpness::{counterexample_ratio_scan, sharpness_threshold};
use dispersive_lab::grid::inverse_transform;
use num_complex::Complex64;

const PI: f64 = std::f64::consts::PI;

fn main() -> dispersive_lab::Result<()> {
    let n = 2048;
    let grid = GridSpec::centered(25.6, n)?;
    let dxi = 2.0 * PI / (n as f64 * grid.dx);
    let fhat = SpectrumFunction::sample(-(n as f64 / 2.0) * dxi, dxi, n, |xi| {
        Complex64::new((-xi * xi).exp(), 0.0)
    })?;
    let tg = TimeGrid::geometric(20);

    let mf = maximal_function(&fhat, 0.5, 2.0, &tg, &grid)?;
    let f = inverse_transform(&fhat, &grid)?;
    let j0 = (-grid.x0 / grid.dx).round() as usize;
    println!(
        "P*f(0) = {:.6} vs f(0) = {:.6} (recovered via t_min = 2^-20)",
        mf.sup.values[j0], f.values[j0].re
    );
    println!("argmax t at x = 0: {:.3e}", mf.argmax_t[j0]);

    // damped maximal never beats the undamped group in L²
    let undamped = maximal_function_undamped(&fhat, 0.5, &tg, &grid)?;
    println!(
        "damped/undamped maximal L2 ratio = {:.4}",
        mf.sup.l2_norm(false) / undamped.sup.l2_norm(false)
    );

    // Hardy–Littlewood and kernel domination
    let m = hardy_littlewood(&f);
    println!("HL maximal at 0: {:.5} (sup of f = {:.5})", m.values[j0], f.sup_norm());
    for a in [0.5, 1.0, 2.0] {
        let ts: Vec<f64> = (1..=8).map(|k| 2f64.powi(-k)).collect();
        let r = domination_check(&fhat, a, &ts, &grid)?;
        println!("  dissipative/HL domination sup ratio (a = {a}): {r:.4}");
    }

    // weak-(1,1) style sweep for a narrow bump in the dissipative regime
    let w = 0.05;
    let bump = SpectrumFunction::sample(-(n as f64 / 2.0) * dxi, dxi, n, |xi| {
        Complex64::new(w / (2.0 * PI.sqrt()) * (-w * w * xi * xi / 4.0).exp(), 0.0)
    })?;
    let l1 = w * PI.sqrt();
    let bump_max = maximal_function(&bump, 0.5, 0.5, &TimeGrid::geometric(14), &grid)?;
    let mut worst = 0.0f64;
    let mut lambda = 1e-3;
    while lambda < 1.0 {
        worst = worst.max(level_set_measure(&bump_max.sup, lambda)? * lambda / l1);
        lambda *= 2.0;
    }
    println!("weak-(1,1) sup of lambda·|{{P*f > lambda}}|/|f|_L1 (gamma = 0.5): {worst:.4}");

    // ratio scan across the counterexample family, above and below threshold
    let (a, gamma) = (0.5, 2.0);
    let thr = sharpness_threshold(a, gamma)?;
    println!("ratio scan |P*f|_L2(B)/|f|_Hs across nu = 2^-3..2^-8 (threshold {thr}):");
    let nus: Vec<f64> = (3..=8).map(|k| 2f64.powi(-k)).collect();
    for s in [thr + 0.05, thr - 0.03] {
        let rows = counterexample_ratio_scan(&nus, a, gamma, s, 20)?;
        let ratios: Vec<f64> = rows.iter().map(|r| (r.ratio * 1e3).round() / 1e3).collect();
        println!("  s = {s:.4}: {ratios:?}");
    }
    Ok(())
}
