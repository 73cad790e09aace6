//! Sharpness experiments: counterexample scaling laws and the threshold.
//!
//! ```bash
//! cargo run --release --example sharpness_scan
//! ```
//!
//! Three regressions pin the sharp exponent s* = (a/4)(1-1/γ) for a < 1 and
//! s* = ½(1-1/γ) for a = 1:
//! * the Sobolev mass of the modulated bump family, slope a - 4s - a/γ;
//! * the designated-interval minima of its maximal function, slope (a-1)-a/γ;
//! * the band-indicator minima at a = 1, slope 1 in N.

use dispersive_lab::sharpness::{
    designated_interval, designated_time, f_band_designated_value, hs_norm_scan,
    lower_bound_scan_f_band, lower_bound_scan_f_nu, sharpness_verdict, support_radius,
    weak_ratio_exhibit,
};

fn main() -> dispersive_lab::Result<()> {
    let (a, gamma) = (0.5, 2.0);
    let nus: Vec<f64> = (3..=10).map(|k| 2f64.powi(-k)).collect();

    println!("family geometry at nu = 0.1:");
    println!("  support radius  = {:.4}", support_radius(0.1, a, gamma));
    println!("  designated interval = {:?}", designated_interval(0.1, a, gamma));
    println!("  designated time at interval end = {:.4e}",
        designated_time(designated_interval(0.1, a, gamma).1, 0.1, a));

    for s in [0.03, 0.1] {
        let (_, fit, predicted) = hs_norm_scan(&nus, a, gamma, s)?;
        println!(
            "Hs mass slope (s = {s}): measured {:+.4}, predicted {predicted:+.4}, R2 = {:.5}",
            fit.slope, fit.r2
        );
    }

    let scan = lower_bound_scan_f_nu(&nus, a, gamma, None, 17)?;
    println!(
        "designated minima slope: measured {:+.4}, predicted {:+.4}, R2 = {:.5}",
        scan.fit.slope, scan.predicted_slope, scan.fit.r2
    );

    let bands: Vec<f64> = (4..=10).map(|k| 2f64.powi(k)).collect();
    let band_scan = lower_bound_scan_f_band(&bands, gamma, None, 17)?;
    println!(
        "band-family slope (a = 1): measured {:+.4}, predicted {:+.4}, R2 = {:.5}",
        band_scan.fit.slope, band_scan.predicted_slope, band_scan.fit.r2
    );
    println!(
        "  floor check at N = 64: designated value at the worst x = {:.4} (>= (N/2)e^-1 = {:.4})",
        f_band_designated_value(64.0, gamma, 64f64.powf(-0.5)),
        32.0 * (-1.0f64).exp()
    );

    for s in [0.03, 0.0625, 0.25] {
        let (verdict, thr) = sharpness_verdict(a, gamma, s)?;
        println!("verdict at s = {s}: {} (threshold {thr})", verdict.as_str());
    }

    println!("weak-type contradiction ratio across nu (grows iff s < threshold):");
    for s in [0.0325, 0.1125] {
        let rows = weak_ratio_exhibit(&nus, a, gamma, s)?;
        let vals: Vec<f64> = rows.iter().map(|r| (r.1 * 1e3).round() / 1e3).collect();
        println!("  s = {s}: {vals:?}");
    }
    Ok(())
}
