//! Dyadic-block L¹ summability and its crossover in the regularity weight α.
//!
//! ```bash
//! cargo run --release --example dyadic_summability
//! ```
//!
//! The two-time oscillatory kernel splits over dyadic annuli Λ_M. At a fixed
//! time pair the dissipation e^{-ε|ξ|^a} eventually crushes every block; the
//! regime that matters is uniform in the times, realized here by coupling
//! dissipation to frequency (t ~ M^{-a/γ}). Asymptotically the worst-case
//! block norms behave like M^{(a/2)(1-1/γ)-α}, so the dyadic sum converges
//! exactly when α exceeds α* = (a/2)(1-1/γ). At desk scale (M ≤ 2^10) the
//! oscillatory gain builds up slowly: the measured slopes sit above -α but
//! below the asymptote, separating clearly across α* nonetheless.

use dispersive_lab::cutoff::CutoffFamily;
use dispersive_lab::kernels::{
    alpha_crossover, lambda_l1_matched_sweep, lambda_l1_partial_sums, lambda_m,
    OscillatoryKernelParams,
};
use dispersive_lab::regression::fit_log_log;

fn main() -> dispersive_lab::Result<()> {
    let cutoffs = CutoffFamily::standard();
    let (a, gamma) = (0.5, 2.0);
    println!("crossover alpha* = {:.4}", alpha_crossover(a, gamma));

    // one block, fixed times: partition-of-unity sanity value
    let prm = OscillatoryKernelParams::new(0.5, 0.25, 0.4, a, gamma, 1024.0)?;
    let v = lambda_m(0.7, &prm, 16.0, &cutoffs)?;
    println!("Lambda_16(0.7) = {:.6e} + {:.6e} i", v.re, v.im);

    println!("fixed-time partial sums (t1 = 0.5, t2 = 0.25, alpha = 0.4):");
    let terms = lambda_l1_partial_sums(&prm, &cutoffs, 64.0)?;
    let mut acc = 0.0;
    for (m, v) in &terms {
        acc += v;
        println!("  M = {m:<5} |Lambda_M|_L1 = {v:.5e}   partial sum = {acc:.5}");
    }

    println!("dissipation-matched worst-case sweep, M up to 2^10:");
    for alpha in [0.2, 0.05] {
        let rows = lambda_l1_matched_sweep(a, gamma, alpha, &cutoffs, 1024.0, &[0.5, 1.0, 2.0])?;
        let tail = &rows[rows.len() - 8..];
        let fit = fit_log_log(
            &tail.iter().map(|r| r.0).collect::<Vec<_>>(),
            &tail.iter().map(|r| r.1).collect::<Vec<_>>(),
        )?;
        let asymptote = 0.5 * a * (1.0 - 1.0 / gamma) - alpha;
        println!(
            "  alpha = {alpha:<5} tail log-slope = {:+.4} (asymptote {:+.4}), terms: {:?}",
            fit.slope,
            asymptote,
            rows.iter().map(|r| (r.1 * 1e3).round() / 1e3).collect::<Vec<_>>()
        );
    }
    Ok(())
}
