//! Discrete Riesz energies and weighted maximal integrals.
//!
//! ```bash
//! cargo run --release --example riesz_energy
//! ```
//!
//! The s-energy I_s(μ) = ∬|x-y|^{-s} dμ dμ is the potential-theoretic face
//! of dimension: Cantor-type measures of dimension d keep I_s bounded under
//! refinement for s < d and blow up for s > d. The uniform measure on [0,1]
//! has the closed form I_s = 2/((1-s)(2-s)).

use dispersive_lab::dimension::{energy, weighted_maximal_integral, Energy};
use dispersive_lab::grid::{sobolev_norm, GridSpec, SpectrumFunction};
use dispersive_lab::maximal::TimeGrid;
use dispersive_lab::measure::DiscreteMeasure;
use num_complex::Complex64;

const PI: f64 = std::f64::consts::PI;

fn main() -> dispersive_lab::Result<()> {
    // two-atom exactness
    let mu2 = DiscreteMeasure::two_atoms(0.4)?;
    if let Energy::Finite(v) = energy(&mu2, 0.5)? {
        println!("two-atom I_1/2 = {v:.12} (exact d^-s/2 = {:.12})", 0.4f64.powf(-0.5) / 2.0);
    }

    // uniform oracle: 2/((1-s)(2-s)) = 8/3 at s = 1/2
    for n in [1024usize, 4096, 8192] {
        let mu = DiscreteMeasure::uniform_random(n, 1)?;
        if let Energy::Finite(v) = energy(&mu, 0.5)? {
            println!(
                "uniform {n:>5} atoms: I_1/2 = {v:.6}  (8/3 = {:.6}, rel err {:.2e})",
                8.0 / 3.0,
                (v - 8.0 / 3.0).abs() / (8.0 / 3.0)
            );
        }
    }

    // Frostman-style dichotomy for the middle-thirds measure
    let d = 2f64.ln() / 3f64.ln();
    println!("cantor measure, dimension ln2/ln3 = {d:.4}:");
    for s in [d - 0.2, d + 0.2] {
        let shallow = energy(&DiscreteMeasure::cantor(6)?, s)?.value().unwrap();
        let deep = energy(&DiscreteMeasure::cantor(10)?, s)?.value().unwrap();
        println!("  s = {s:.3}: I_s(depth 6) = {shallow:.4}, I_s(depth 10) = {deep:.4}, ratio {:.3}", deep / shallow);
    }

    // weighted maximal integral against I_{1-2s}^{1/2}·|f|_{Hs}
    let n = 1024;
    let grid = GridSpec::centered(2.56, n)?;
    let dxi = 2.0 * PI / (n as f64 * grid.dx);
    let fhat = SpectrumFunction::sample(-(n as f64 / 2.0) * dxi, dxi, n, |xi| {
        Complex64::new((-xi * xi).exp(), 0.0)
    })?;
    let tg = TimeGrid::geometric(12);
    let s = 0.3;
    for (label, mu) in [
        ("cantor depth 7 in B(0,0.9)", DiscreteMeasure::cantor(7)?.rescaled(0.0, 0.9)?),
        ("uniform 512 in B(0,0.8)", DiscreteMeasure::uniform_random(512, 5)?.rescaled(0.0, 0.8)?),
    ] {
        let integral = weighted_maximal_integral(&fhat, 0.5, 2.0, &tg, &mu, &grid)?;
        let e = energy(&mu, 1.0 - 2.0 * s)?.value().unwrap();
        let hs = sobolev_norm(&fhat, s)?;
        println!(
            "{label}: int P*f dmu = {integral:.5}, I_(1-2s)^(1/2)|f|_Hs = {:.5}, ratio {:.4}",
            e.sqrt() * hs,
            integral / (e.sqrt() * hs)
        );
    }
    Ok(())
}
