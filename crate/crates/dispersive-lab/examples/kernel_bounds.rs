//! Kernel bound ratios: Poisson-type, stable-semigroup and Bessel kernels.
//!
//! ```bash
//! cargo run --release --example kernel_bounds
//! ```
//!
//! The Poisson-type kernel of e^{-(1+i)t(-Δ)^{a/2}} obeys
//! |L(x,t,a)| ≲ t/(t^{2/a}+x²)^{(1+a)/2} and the scaling identity
//! L(x,t,a) = t^{-1/a} L(x t^{-1/a}, 1, a); the bound ratio should be finite
//! and stable over a dense (t,x) sweep. The Bessel-potential ratio
//! |∫e^{ixξ}(1+ξ²)^{-σ/2}dξ|·|x|^{1-σ} approaches the Riesz constant
//! 2Γ(1-σ)sin(πσ/2) as x → 0.

use dispersive_lab::kernels::{
    bessel_kernel_check, fractional_heat_kernel, heat_bound_ratio, poisson_bound_ratio,
    poisson_kernel,
};
use dispersive_lab::numeric::geomspace;

fn main() -> dispersive_lab::Result<()> {
    println!("scaling identity L(x,t,a) = t^(-1/a) L(x t^(-1/a), 1, a):");
    for (x, t, a) in [(3.0, 0.2, 0.7), (1.0, 0.1, 0.5), (2.0, 0.4, 2.0)] {
        let lhs = poisson_kernel(x, t, a)?;
        let s = t.powf(-1.0 / a);
        let rhs = poisson_kernel(x * s, 1.0, a)? * s;
        println!(
            "  (x,t,a) = ({x},{t},{a}): rel diff = {:.3e}",
            (lhs - rhs).norm() / rhs.norm()
        );
    }

    println!("poisson bound ratio sup over t in [1e-3,1] x in [0,50]:");
    for a in [0.5, 1.0, 1.5, 2.0] {
        let mut sup = 0.0f64;
        for &t in &geomspace(1e-3, 1.0, 12) {
            for j in 0..60 {
                let x = 50.0 * j as f64 / 59.0;
                sup = sup.max(poisson_bound_ratio(x, t, a)?);
            }
        }
        println!("  a = {a:<4} sup ratio = {sup:.4}");
    }

    println!("stable-semigroup kernels (positive for a <= 2) and their ratio:");
    for a in [0.5, 1.0, 2.0] {
        let (p, pt) = fractional_heat_kernel(0.7, 0.2, a)?;
        let r = heat_bound_ratio(0.7, 0.2, a)?;
        println!("  a = {a:<4} P = {p:.5e}  P~ = {pt:+.5e}  ratio = {r:.4}");
    }

    println!("bessel ratio |K(x)|·|x|^(1-sigma) along x = 2^-k (sigma = 0.5):");
    let limit = 2.0 * std::f64::consts::PI;
    for k in [1, 4, 8, 12, 16, 20] {
        let x = 2f64.powi(-k);
        let r = bessel_kernel_check(x, 0.5)?;
        println!("  x = 2^-{k:<2} ratio = {r:.6}");
    }
    println!("  (Riesz constant sqrt(2 pi) = {:.6})", limit.sqrt());
    Ok(())
}
