//! The complex-time propagator against closed-form Gaussian evolutions.
//!
//! ```bash
//! cargo run --release --example propagate_gaussian
//! ```
//!
//! For the spectrum f̂(ξ) = e^{-ξ²} every member of the family has an exact
//! complex-Gaussian image: the a = 2 multiplier turns ∫ e^{-cξ²+ixξ} dξ into
//! √(π/c)·e^{-x²/(4c)}. The example propagates with the complex-time,
//! dissipative and Ginzburg–Landau multipliers and reports sup errors, then
//! demonstrates the variable-time truncated operator converging to the plain
//! propagator as the frequency cap N grows.

use dispersive_lab::cutoff::CutoffFamily;
use dispersive_lab::grid::{inverse_transform, GridSpec, SpectrumFunction};
use dispersive_lab::numeric::sup_rel_error;
use dispersive_lab::propagator::{
    dissipative_propagate, ginzburg_landau_propagate, propagate, propagate_truncated,
    EvolutionParams,
};
use num_complex::Complex64;

const PI: f64 = std::f64::consts::PI;

fn complex_gaussian(x: f64, c: Complex64) -> Complex64 {
    (Complex64::new(PI, 0.0) / c).sqrt() * (-x * x / (4.0 * c)).exp()
}

fn main() -> dispersive_lab::Result<()> {
    let n = 4096;
    let grid = GridSpec::centered(25.6, n)?;
    let dxi = 2.0 * PI / (n as f64 * grid.dx);
    let fhat = SpectrumFunction::sample(-(n as f64 / 2.0) * dxi, dxi, n, |xi| {
        Complex64::new((-xi * xi).exp(), 0.0)
    })?;

    println!("complex-time propagator, a = 2, gamma = 1 (closed form c = 1 + t - it)");
    for t in [0.1, 0.25, 0.5] {
        let p = EvolutionParams::new(2.0, 1.0, t)?;
        let got = propagate(&fhat, &p, &grid)?;
        let want: Vec<Complex64> = grid
            .points()
            .map(|x| complex_gaussian(x, Complex64::new(1.0 + t, -t)))
            .collect();
        println!("  t = {t:<5}  sup rel error = {:.3e}", sup_rel_error(&got.values, &want));
    }

    println!("dissipative semigroup, a = 2 (heat flow, c = 1 + t)");
    for t in [0.2, 0.8] {
        let got = dissipative_propagate(&fhat, t, 2.0, &grid)?;
        let want: Vec<Complex64> = grid
            .points()
            .map(|x| complex_gaussian(x, Complex64::new(1.0 + t, 0.0)))
            .collect();
        println!("  t = {t:<5}  sup rel error = {:.3e}", sup_rel_error(&got.values, &want));
    }

    println!("Ginzburg-Landau ray, t = 0.3 (c = 1 + t e^{{i theta}})");
    for theta in [-PI / 4.0, 0.0, PI / 3.0] {
        let got = ginzburg_landau_propagate(&fhat, 0.3, theta, &grid)?;
        let want: Vec<Complex64> = grid
            .points()
            .map(|x| complex_gaussian(x, Complex64::new(1.0, 0.0) + Complex64::from_polar(0.3, theta)))
            .collect();
        println!(
            "  theta = {theta:+.3}  sup rel error = {:.3e}",
            sup_rel_error(&got.values, &want)
        );
    }

    // truncated variable-time operator: constant time map, growing cap
    println!("truncated operator vs propagate (rational spectrum, t = 0.3, a = 0.5, gamma = 2)");
    let nh = 2048;
    let dxi = 0.02;
    let heavy = SpectrumFunction::sample(-(nh as f64 / 2.0) * dxi, dxi, nh, |xi| {
        Complex64::new((1.0 + xi * xi).powi(-2), 0.0)
    })?;
    let small = GridSpec::centered(5.0, 256)?;
    let p = EvolutionParams::new(0.5, 2.0, 0.3)?;
    let full = inverse_transform(
        &heavy.multiplied(|xi| dispersive_lab::propagator::multiplier(xi, &p)),
        &small,
    )?;
    let cutoffs = CutoffFamily::standard();
    for k in [3, 4, 5, 6] {
        let n_cap = 2f64.powi(k);
        let tr = propagate_truncated(&heavy, 0.5, 2.0, n_cap, &|_| 0.3, &cutoffs, &small)?;
        let err = tr
            .values
            .iter()
            .zip(&full.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0f64, f64::max);
        println!("  N = 2^{k:<2} sup error = {err:.3e}");
    }
    Ok(())
}
