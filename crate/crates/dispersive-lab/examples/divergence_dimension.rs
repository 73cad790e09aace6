//! Divergence-set probes and box-counting dimension.
//!
//! ```bash
//! cargo run --release --example divergence_dimension
//! ```
//!
//! The set where P^t f fails to approach f as t → 0⁺ has Hausdorff dimension
//! bounded by an explicit exponent in (a, γ, s). The probe realizes an outer
//! approximation at scale (dx, t_max): grid points where the discrepancy
//! exceeds a level λ for some small sampled time. Box counting over dyadic
//! scales then gives a computable surrogate dimension (box ≥ Hausdorff, so
//! "measured ≤ bound + tolerance" is a legitimate consistency check).

use dispersive_lab::dimension::{
    box_dimension, dim_bound_exponent, divergence_probe, dyadic_scales,
};
use dispersive_lab::grid::{GridSpec, SpectrumFunction};
use dispersive_lab::maximal::TimeGrid;
use dispersive_lab::measure::DiscreteMeasure;
use dispersive_lab::sharpness::{
    build_f_nu_padded, designated_interval, designated_time, support_radius,
};
use num_complex::Complex64;

const PI: f64 = std::f64::consts::PI;

fn main() -> dispersive_lab::Result<()> {
    // calibration sets
    let interval: Vec<f64> = (0..=4096).map(|k| k as f64 / 4096.0).collect();
    let fit = box_dimension(&interval, &dyadic_scales(2, 9))?;
    println!("box dim of [0,1] sample: {:.4} (expect 1)", fit.slope);
    let fit = box_dimension(&[0.37], &dyadic_scales(2, 9))?;
    println!("box dim of a point:      {:.4} (expect 0)", fit.slope);
    let cantor: Vec<f64> = DiscreteMeasure::cantor(8)?
        .atoms()
        .iter()
        .map(|a| a.position)
        .collect();
    let fit = box_dimension(&cantor, &dyadic_scales(2, 10))?;
    println!(
        "box dim of depth-8 middle-thirds set: {:.4} (ln2/ln3 = {:.4})",
        fit.slope,
        2f64.ln() / 3f64.ln()
    );

    // Schwartz data: no divergence at any reasonable level
    let n = 1024;
    let grid = GridSpec::centered(12.8, n)?;
    let dxi = 2.0 * PI / (n as f64 * grid.dx);
    let gauss = SpectrumFunction::sample(-(n as f64 / 2.0) * dxi, dxi, n, |xi| {
        Complex64::new((-xi * xi).exp(), 0.0)
    })?;
    let tiny = TimeGrid::new(vec![2f64.powi(-22), 2f64.powi(-21), 2f64.powi(-20)])?;
    let pts = divergence_probe(&gauss, 0.5, 2.0, 1e-3, &tiny, &grid)?;
    println!("Schwartz probe at lambda = 1e-3, t_max = 2^-20: {} points", pts.len());

    // counterexample data: the probe catches the designated interval
    let (a, gamma, s) = (0.5, 2.0, 0.2);
    let bound = dim_bound_exponent(a, gamma, s)?;
    for k in [4, 5] {
        let nu = 2f64.powi(-k);
        let (fhat, fine) = build_f_nu_padded(nu, a, gamma, 1.3, 16.0)?;
        let (_, ell) = designated_interval(nu, a, gamma);
        let times: Vec<f64> = (1..=33)
            .map(|j| designated_time(ell * j as f64 / 33.0, nu, a))
            .filter(|t| *t > 0.0 && *t < 1.0)
            .collect();
        let tg = TimeGrid::new(times)?;
        let lambda = 0.1 * support_radius(nu, a, gamma);
        let pts = divergence_probe(&fhat, a, gamma, lambda, &tg, &fine)?;
        let fit = box_dimension(&pts, &dyadic_scales(1, 6))?;
        println!(
            "nu = 2^-{k}: probe has {} points, box dim {:.4} <= bound {:.4} + 0.15",
            pts.len(),
            fit.slope,
            bound
        );
    }

    // the exponent table across regimes
    println!("dimension-bound exponents:");
    for (a, gamma, s) in [
        (0.5, 2.0, 0.3),
        (0.5, 2.0, 0.2),
        (2.0, 1.5, 0.2),
        (1.0, 3.0, 0.4),
        (0.7, 0.8, 0.45),
    ] {
        match dim_bound_exponent(a, gamma, s) {
            Ok(b) => println!("  (a,gamma,s) = ({a},{gamma},{s}): {b:.4}"),
            Err(e) => println!("  (a,gamma,s) = ({a},{gamma},{s}): {e}"),
        }
    }
    Ok(())
}
