//! Kernel objects of the complex-time propagator and their bound checks.
//!
//! ## Half-line kernels by contour rotation
//!
//! The Poisson-type kernel `L(x,t,a) = ∫ e^{-(1+i)t|ξ|^a} e^{ixξ} dξ` and the
//! stable-semigroup kernels are absolutely convergent but brutally
//! oscillatory on the real axis once `x·t^{-1/a}` is large. Each half-line
//! piece `∫_0^∞ e^{-zt ξ^a} e^{±ixξ} dξ` is therefore rotated onto a ray
//! `ξ = u e^{±iφ}` chosen so that both `Re(z t (ue^{±iφ})^a)` and
//! `x u sin φ` grow along the ray: the integrand then decays exponentially
//! with a bounded number of oscillations per e-fold, and graded
//! Gauss–Legendre panels converge to near machine precision. The same
//! rotation evaluates the Bessel-potential kernel
//! `∫ e^{ixξ}(1+ξ²)^{-σ/2} dξ`, whose branch points `±i` stay at distance
//! `cos φ` from the ray.
//!
//! ## Dyadic blocks
//!
//! The high-frequency kernel splits over dyadic annuli,
//!
//! ```text
//! Λ_M(x) = ∫ e^{it|ξ|^a} e^{-ixξ} g_M(ξ) dξ,
//! g_M(ξ) = e^{-ε|ξ|^a} (1+ξ²)^{-α/2} η(ξ/M) μ(ξ/N),
//! ```
//!
//! with `t = t₁-t₂` and `ε = t₁^γ + t₂^γ`. Each block is a compactly
//! supported C^∞ integrand on `M ≤ |ξ| ≤ 4M`, so the uniform trapezoid rule
//! (phase-paced node count) converges super-algebraically; `x`-sweeps reuse a
//! precomputed table and advance `e^{-ixξ}` by recurrence.
//!
//! The per-block L¹ norms decide summability: uniformly in the times, the
//! blocks obey `‖Λ_M‖_{L¹} ≲ M^{(a/2)(1-1/γ)-α}` for `0 < a < 1` (and the
//! `a=1` analogue with exponent `(1-1/γ)-α`), so the dyadic sum is finite
//! exactly when α exceeds the crossover `(a/2)(1-1/γ)₊`. The worst time pair
//! at scale M couples dissipation to frequency as `t ~ M^{-a/γ}`; the
//! matched sweep below realizes that coupling.

use num_complex::Complex64;

use crate::cutoff::CutoffFamily;
use crate::error::{ensure, Error, Result};
use crate::numeric::{next_pow2, pairwise_sum};
use crate::quad::{ray_integral, OscTable};

const PI: f64 = std::f64::consts::PI;

/// Parameters of the two-time oscillatory kernel: times `t1, t2 ∈ (0,1)`,
/// regularity weight `alpha ∈ (0,1)`, dispersion `a > 0`, dissipation
/// `gamma > 0`, and the dyadic frequency cap `n_cap`.
#[derive(Debug, Clone, Copy)]
pub struct OscillatoryKernelParams {
    pub t1: f64,
    pub t2: f64,
    pub alpha: f64,
    pub a: f64,
    pub gamma: f64,
    pub n_cap: f64,
}

impl OscillatoryKernelParams {
    pub fn new(t1: f64, t2: f64, alpha: f64, a: f64, gamma: f64, n_cap: f64) -> Result<Self> {
        ensure(t1 > 0.0 && t1 < 1.0, "t1 must lie in (0,1)")?;
        ensure(t2 > 0.0 && t2 < 1.0, "t2 must lie in (0,1)")?;
        ensure(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)")?;
        ensure(a > 0.0, "a must be positive")?;
        ensure(gamma > 0.0, "gamma must be positive")?;
        ensure(
            n_cap >= 1.0 && n_cap.log2().fract().abs() < 1e-12,
            "frequency cap must be a dyadic integer >= 1",
        )?;
        Ok(OscillatoryKernelParams {
            t1,
            t2,
            alpha,
            a,
            gamma,
            n_cap,
        })
    }

    /// Time difference `t = t1 - t2` (any sign).
    pub fn t(&self) -> f64 {
        self.t1 - self.t2
    }

    /// Dissipation strength `ε = t1^γ + t2^γ > 0`.
    pub fn epsilon(&self) -> f64 {
        self.t1.powf(self.gamma) + self.t2.powf(self.gamma)
    }
}

// ---------------------------------------------------------------------------
// rotated-ray kernels
// ---------------------------------------------------------------------------

/// Rotation angle keeping the damping factor alive along the ray:
/// `cos(z_arg + aφ) ≥ margin`, with φ capped at 1.25 rad.
fn rotation_angle(a: f64, z_arg: f64, margin: f64) -> f64 {
    let budget = margin.acos() - z_arg;
    (0.95 * budget / a).min(1.25).max(1e-3)
}

/// One damped half-line piece `∫_0^∞ extra(ξ) e^{-z t ξ^a} e^{i s x ξ} dξ`
/// (s = ±1), rotated by `s·φ`. Rotating with the sign of the oscillation
/// turns `e^{isxξ}` into decay `e^{-xu sin φ}`, while φ is kept small enough
/// that `Re(z (u e^{isφ})^a) ≥ margin·|z| u^a`.
fn damped_halfline(
    x: f64,
    t: f64,
    a: f64,
    z: Complex64,
    sign: f64,
    extra: &dyn Fn(Complex64) -> Complex64,
) -> Result<Complex64> {
    let zarg = z.arg();
    let margin = 0.35;
    // Re(z e^{i s a φ}) = |z| cos(zarg + s·aφ); with the rotation tied to s
    // the constraint reads cos(s·zarg + aφ) ≥ margin either way.
    let effective_arg = if sign > 0.0 { zarg } else { -zarg };
    let phi = rotation_angle(a, effective_arg, margin);
    let cdamp = (effective_arg + a * phi).cos();
    debug_assert!(cdamp >= margin - 1e-9);

    let damp_rate = z.norm() * t * cdamp;
    let osc_rate = x.abs() * phi.sin();
    let u_t = (45.0 / damp_rate.max(1e-300)).powf(1.0 / a);
    let u_x = if osc_rate > 0.0 { 45.0 / osc_rate } else { f64::INFINITY };
    let u_max = u_t.min(u_x);
    let scale = (1.0 / damp_rate.max(1e-300))
        .powf(1.0 / a)
        .min(if osc_rate > 0.0 { 1.0 / osc_rate } else { f64::INFINITY })
        .min(u_max);

    let f = move |w: Complex64| {
        extra(w) * (-z * t * w.powf(a) + Complex64::i() * sign * x * w).exp()
    };
    let phase_bound = move |u: f64| x.abs() + z.norm() * t * a * u.powf(a - 1.0);
    let tol = 1e-13 * scale.max(1e-30);
    ray_integral(&f, sign * phi, scale, u_max, &phase_bound, tol)
}

/// Poisson-type kernel `L(x,t,a) = ∫_ℝ e^{-(1+i)t|ξ|^a} e^{ixξ} dξ`
/// (no 2π factor), the convolution object of `e^{-(1+i)t(-Δ)^{a/2}}`.
/// Satisfies the scaling identity `L(x,t,a) = t^{-1/a} L(x t^{-1/a}, 1, a)`.
pub fn poisson_kernel(x: f64, t: f64, a: f64) -> Result<Complex64> {
    ensure(t > 0.0 && t.is_finite(), "t must be positive")?;
    ensure(a > 0.0 && a.is_finite(), "a must be positive")?;
    let z = Complex64::new(1.0, 1.0);
    let xa = x.abs();
    let id = |_w: Complex64| Complex64::new(1.0, 0.0);
    let plus = damped_halfline(xa, t, a, z, 1.0, &id)?;
    let minus = damped_halfline(xa, t, a, z, -1.0, &id)?;
    Ok(plus + minus)
}

/// `|L(x,t,a)| (t^{2/a} + x²)^{(1+a)/2} / t` — bounded in (x, t) for fixed a.
pub fn poisson_bound_ratio(x: f64, t: f64, a: f64) -> Result<f64> {
    let l = poisson_kernel(x, t, a)?;
    Ok(l.norm() * (t.powf(2.0 / a) + x * x).powf((1.0 + a) / 2.0) / t)
}

/// Stable-semigroup kernel `P(x,t,a) = (1/2π) ∫ e^{-t|ξ|^a} e^{ixξ} dξ`, the
/// true convolution kernel of `e^{-t(-Δ)^{a/2}}` (real and, for a ≤ 2,
/// positive), together with the derivative-weighted variant
/// `P̃(x,t,a) = (1/2π) ∫ t|ξ|^a e^{-t|ξ|^a} e^{ixξ} dξ`.
pub fn fractional_heat_kernel(x: f64, t: f64, a: f64) -> Result<(f64, f64)> {
    ensure(t > 0.0 && t.is_finite(), "t must be positive")?;
    ensure(a > 0.0 && a.is_finite(), "a must be positive")?;
    let z = Complex64::new(1.0, 0.0);
    let xa = x.abs();
    let id = |_w: Complex64| Complex64::new(1.0, 0.0);
    let p = damped_halfline(xa, t, a, z, 1.0, &id)? + damped_halfline(xa, t, a, z, -1.0, &id)?;
    let weight = move |w: Complex64| w.powf(a) * t;
    let pt =
        damped_halfline(xa, t, a, z, 1.0, &weight)? + damped_halfline(xa, t, a, z, -1.0, &weight)?;
    Ok((p.re / (2.0 * PI), pt.re / (2.0 * PI)))
}

/// `(|P| + |P̃|)(t^{2/a} + x²)^{(1+a)/2} / t` — the bound ratio for the
/// dissipative kernels.
pub fn heat_bound_ratio(x: f64, t: f64, a: f64) -> Result<f64> {
    let (p, pt) = fractional_heat_kernel(x, t, a)?;
    Ok((p.abs() + pt.abs()) * (t.powf(2.0 / a) + x * x).powf((1.0 + a) / 2.0) / t)
}

/// Bessel-potential kernel `∫ e^{ixξ} (1+ξ²)^{-σ/2} dξ` by rotated-ray
/// quadrature. Exposed for 0 < σ < 1 through [`bessel_kernel_check`];
/// this raw form also accepts larger σ for oracle comparisons.
pub fn bessel_kernel_raw(x: f64, sigma: f64) -> Result<f64> {
    ensure(x != 0.0, "kernel is singular at x = 0")?;
    ensure(sigma > 0.0 && sigma < 2.5, "sigma out of supported range")?;
    let xa = x.abs();
    let phi = PI / 4.0 * 0.98;
    let u_max = 45.0 / (xa * phi.sin());
    let scale = 1.0f64.min(u_max);
    let f = move |w: Complex64| {
        (Complex64::i() * xa * w).exp() * (Complex64::new(1.0, 0.0) + w * w).powf(-sigma / 2.0)
    };
    // oscillation xa·cos φ plus the branch-point bump near u ~ 1, whose
    // argument varies at rate ≲ σ·min(u, 1/u)
    let rate = move |u: f64| xa + 2.0 / (1.0 + u);
    // magnitude of the half-line piece ~ max(1, (x sinφ)^{σ-1})
    let tol = 1e-12 * (xa * phi.sin()).powf(sigma - 1.0).max(1.0);
    let half = ray_integral(&f, phi, scale, u_max, &rate, tol)?;
    Ok(2.0 * half.re)
}

/// `|∫ e^{ixξ}(1+ξ²)^{-σ/2} dξ| · |x|^{1-σ}` for `σ ∈ (0,1)`, `x ≠ 0`:
/// bounded as `x → 0`.
pub fn bessel_kernel_check(x: f64, sigma: f64) -> Result<f64> {
    ensure(sigma > 0.0 && sigma < 1.0, "sigma must lie in (0,1)")?;
    ensure(x != 0.0, "kernel is singular at x = 0")?;
    Ok(bessel_kernel_raw(x, sigma)?.abs() * x.abs().powf(1.0 - sigma))
}

// ---------------------------------------------------------------------------
// dyadic blocks
// ---------------------------------------------------------------------------

fn lambda_table(
    prm: &OscillatoryKernelParams,
    m: f64,
    cutoffs: &CutoffFamily,
    x_max: f64,
) -> Result<OscTable> {
    let t = prm.t();
    let eps = prm.epsilon();
    let alpha = prm.alpha;
    let a = prm.a;
    let n_cap = prm.n_cap;
    // node count: ~16 samples per oscillation at the largest |x| requested,
    // and at least ~1100 samples per annulus for the C^∞ envelope
    let rate = x_max.abs() + t.abs() * a * (4.0 * m).powf(a - 1.0).max(m.powf(a - 1.0));
    let n = next_pow2((3.0 * m * rate * 16.0 / (2.0 * PI)).max(4096.0));
    if n > 1 << 22 {
        return Err(Error::NumericFailure(format!(
            "dyadic block quadrature needs {n} nodes at M = {m}, x = {x_max}; \
             phase resolution budget exceeded"
        )));
    }
    let c = *cutoffs;
    Ok(OscTable::new(m, 4.0 * m, n, move |xi| {
        let env = (-eps * xi.powf(a)).exp() * (1.0 + xi * xi).powf(-alpha / 2.0);
        let win = c.eta(xi / m) * c.mu(xi / n_cap);
        Complex64::from_polar(env * win, t * xi.powf(a))
    }))
}

/// Dyadic block `Λ_M(x)` of the two-time oscillatory kernel.
pub fn lambda_m(
    x: f64,
    prm: &OscillatoryKernelParams,
    m: f64,
    cutoffs: &CutoffFamily,
) -> Result<Complex64> {
    ensure(m >= 1.0 && m.log2().fract().abs() < 1e-12, "M must be dyadic >= 1")?;
    Ok(lambda_table(prm, m, cutoffs, x)?.eval_cos(x))
}

/// `∫ g_M` — the trivial modulus bound for `|Λ_M(0)|`; also bounded by a
/// constant multiple of `M^{1-α}`.
pub fn lambda_m_mass(prm: &OscillatoryKernelParams, m: f64, cutoffs: &CutoffFamily) -> Result<f64> {
    let table = lambda_table(prm, m, cutoffs, 0.0)?;
    // the table stores g_M e^{it ξ^a}; its modulus sum is ∫ g_M over one annulus
    Ok(2.0 * table.abs_mass())
}

/// `‖Λ_M‖_{L¹(ℝ)}` by shell-wise quadrature in x. Shells expand
/// geometrically past the critical radius `2^{2-a} M^{a-1} |t|` until three
/// consecutive shells contribute below 10⁻⁶ of the accumulated norm.
pub fn lambda_l1_norm(
    prm: &OscillatoryKernelParams,
    m: f64,
    cutoffs: &CutoffFamily,
) -> Result<f64> {
    ensure(m >= 1.0 && m.log2().fract().abs() < 1e-12, "M must be dyadic >= 1")?;
    let t = prm.t();
    let r_crit = 2f64.powf(2.0 - prm.a) * m.powf(prm.a - 1.0) * t.abs();
    let mut shells: Vec<f64> = Vec::new();
    let mut acc = 0.0f64;
    let mut lo = 0.0f64;
    let mut hi = 0.25 / m;
    let mut quiet = 0usize;
    let x_far_min = (4.0 * r_crit).max(16.0 / m);
    let x_hard = 65536.0 / m;
    loop {
        let table = lambda_table(prm, m, cutoffs, hi)?;
        // Simpson over |Λ_M| with ≥ 8 points per oscillation lobe
        let lobes = (hi - lo) * 4.0 * m / PI;
        let mut n = ((lobes * 8.0).ceil() as usize).clamp(8, 40000);
        if n % 2 == 1 {
            n += 1;
        }
        let h = (hi - lo) / n as f64;
        let mut terms = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let w = if k == 0 || k == n {
                1.0
            } else if k % 2 == 1 {
                4.0
            } else {
                2.0
            };
            terms.push(w * table.eval_cos(lo + h * k as f64).norm());
        }
        let shell = pairwise_sum(&terms) * h / 3.0;
        shells.push(shell);
        acc += shell;
        if hi >= x_far_min {
            if shell < 1e-6 * acc {
                quiet += 1;
            } else {
                quiet = 0;
            }
            if quiet >= 3 || hi >= x_hard {
                break;
            }
        }
        lo = hi;
        hi *= 2.0;
    }
    Ok(2.0 * acc)
}

/// Per-block L¹ norms for `M = 1, 2, 4, …, m_max` at the *given* time pair.
/// With fixed times the dissipation `e^{-ε|ξ|^a}` eventually crushes every
/// block, so the sequence always stabilizes; the uniform-in-time behavior is
/// probed by [`lambda_l1_matched_sweep`].
pub fn lambda_l1_partial_sums(
    prm: &OscillatoryKernelParams,
    cutoffs: &CutoffFamily,
    m_max: f64,
) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    for m in CutoffFamily::dyadic_scales(m_max) {
        out.push((m, lambda_l1_norm(prm, m, cutoffs)?));
    }
    Ok(out)
}

/// Worst-case per-block L¹ norms: for each M the time pair is swept over the
/// dissipation-matched ladder `t₁ = κ M^{-a/γ}` with `t₂ = t₁/1024`
/// (minimizing `ε = t₁^γ + t₂^γ ≈ t^γ`, the least dissipation the time tie
/// allows), and the largest norm is kept. This realizes the supremum over
/// times block by block. Asymptotically the per-block log-slope tracks
/// `(a/2)(1-1/γ) - α` (for `0 < a < 1`); at desk scale the oscillatory gain
/// builds up slowly, so measured slopes sit between `-α` and that limit.
pub fn lambda_l1_matched_sweep(
    a: f64,
    gamma: f64,
    alpha: f64,
    cutoffs: &CutoffFamily,
    m_max: f64,
    kappas: &[f64],
) -> Result<Vec<(f64, f64)>> {
    ensure(!kappas.is_empty(), "need at least one ladder point")?;
    let n_cap = 8.0 * m_max;
    let mut out = Vec::new();
    for m in CutoffFamily::dyadic_scales(m_max) {
        let mut worst = 0.0f64;
        for kappa in kappas {
            let t1 = (kappa * m.powf(-a / gamma)).min(0.9);
            let t2 = t1 / 1024.0;
            let prm = OscillatoryKernelParams::new(t1, t2, alpha, a, gamma, n_cap)?;
            worst = worst.max(lambda_l1_norm(&prm, m, cutoffs)?);
        }
        out.push((m, worst));
    }
    Ok(out)
}

/// The full high-frequency oscillatory kernel
/// `∫ e^{it|ξ|^a} e^{-ixξ} e^{-ε|ξ|^a} (1+ξ²)^{-α/2} (1-χ(ξ)) μ(ξ/N) dξ`.
/// Equals `Σ_M Λ_M(x)` by the dyadic partition of unity.
pub fn oscillatory_kernel(
    x: f64,
    prm: &OscillatoryKernelParams,
    cutoffs: &CutoffFamily,
) -> Result<Complex64> {
    let t = prm.t();
    let eps = prm.epsilon();
    let alpha = prm.alpha;
    let a = prm.a;
    let n_cap = prm.n_cap;
    let hi = 2.0 * n_cap;
    let rate = x.abs() + t.abs() * a * hi.powf(a - 1.0).max(1.0);
    let n = next_pow2(
        ((hi - 1.0) * rate * 16.0 / (2.0 * PI))
            .max(16.0 * hi)
            .max(8192.0),
    );
    if n > 1 << 23 {
        return Err(Error::NumericFailure(format!(
            "oscillatory kernel needs {n} nodes at x = {x}, N = {n_cap}"
        )));
    }
    let c = *cutoffs;
    let table = OscTable::new(1.0, hi, n, move |xi| {
        let env = (-eps * xi.powf(a)).exp() * (1.0 + xi * xi).powf(-alpha / 2.0);
        let win = (1.0 - c.chi(xi)) * c.mu(xi / n_cap);
        Complex64::from_polar(env * win, t * xi.powf(a))
    });
    Ok(table.eval_cos(x))
}

// ---------------------------------------------------------------------------
// exponent formulas and local majorants
// ---------------------------------------------------------------------------

/// The local-decay exponent
/// `σ = (1/(a-1)) (α + (a-2)/2 + a(α-1/2) / ((a-1)γ - a))`.
/// Singular at `a = 1` and at `(a-1)γ = a`. For `0 < a < 1`, `γ > 1`:
/// `σ < 1` exactly when `α > (a/2)(1-1/γ)`.
pub fn sigma_exponent(a: f64, gamma: f64, alpha: f64) -> Result<f64> {
    ensure((a - 1.0).abs() > 1e-12, "sigma formula is singular at a = 1")?;
    let denom = (a - 1.0) * gamma - a;
    ensure(denom.abs() > 1e-12, "sigma formula is singular at (a-1)γ = a")?;
    Ok((alpha + 0.5 * (a - 2.0) + a * (alpha - 0.5) / denom) / (a - 1.0))
}

/// The crossover weight `α* = (a/2)(1 - 1/γ)₊` below which the dyadic sum
/// diverges (for `0 < a < 1`; for `a = 1` the crossover is `(1-1/γ)₊`).
pub fn alpha_crossover(a: f64, gamma: f64) -> f64 {
    let base = 1.0 - 1.0 / gamma;
    let plus = base.max(0.0);
    if a < 1.0 {
        0.5 * a * plus
    } else {
        plus
    }
}

/// The pointwise majorant `K(x)` of the oscillatory kernel on `0 < |x| ≤ 1`:
///
/// * `0 < a < 1`: `|x|^{α-1}` for `γ ∈ (0,1)`; `|x|^{α-1} + |x|^{-σ}` for `γ > 1`.
/// * `a = 1`: `|x|^{α-1} + |x|^{γ(α-1)}`.
/// * `a > 1`: `|x|^{α-1}` for `γ ∈ (0,1)`, or for `γ > 1` with `α ∈ [1/2, 1)`;
///   `|x|^{-σ}` for `γ ∈ (1, a/(a-1))` with `α ∈ ((a/2)(1-1/γ), 1/2)`.
///
/// Parameter combinations with no stated majorant return `UnsupportedRegime`.
pub fn local_kernel_bound(x: f64, alpha: f64, gamma: f64, a: f64) -> Result<f64> {
    ensure(x != 0.0, "majorant is singular at x = 0")?;
    ensure(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0,1)")?;
    ensure(a > 0.0 && gamma > 0.0, "a, gamma must be positive")?;
    let r = x.abs();
    let unsupported = |msg: &str| Error::UnsupportedRegime(msg.to_string());

    if (a - 1.0).abs() < 1e-12 {
        return Ok(r.powf(alpha - 1.0) + r.powf(gamma * (alpha - 1.0)));
    }
    if a < 1.0 {
        if gamma < 1.0 {
            Ok(r.powf(alpha - 1.0))
        } else if gamma > 1.0 {
            let sigma = sigma_exponent(a, gamma, alpha)?;
            Ok(r.powf(alpha - 1.0) + r.powf(-sigma))
        } else {
            Err(unsupported("no stated majorant at gamma = 1 for a < 1"))
        }
    } else {
        // a > 1
        if gamma < 1.0 || (gamma > 1.0 && alpha >= 0.5) {
            Ok(r.powf(alpha - 1.0))
        } else if gamma > 1.0 && gamma < a / (a - 1.0) && alpha > alpha_crossover(a, gamma) {
            let sigma = sigma_exponent(a, gamma, alpha)?;
            Ok(r.powf(-sigma))
        } else {
            Err(unsupported(
                "no stated majorant for a > 1 with these (gamma, alpha)",
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn gaussian_l(x: f64, t: f64) -> Complex64 {
        // a = 2 closed form: ∫ e^{-(1+i)tξ²+ixξ} dξ = √(π/((1+i)t)) e^{-x²/(4(1+i)t)}
        let c = Complex64::new(1.0, 1.0) * t;
        (Complex64::new(PI, 0.0) / c).sqrt() * (-x * x / (4.0 * c)).exp()
    }

    #[test]
    fn poisson_kernel_gamma_oracle() {
        // L(0,1,1) = 2 ∫_0^∞ e^{-(1+i)ξ} dξ = 2/(1+i) = 1 - i
        let l = poisson_kernel(0.0, 1.0, 1.0).unwrap();
        assert!((l - Complex64::new(1.0, -1.0)).norm() < 1e-11, "{l}");
    }

    #[test]
    fn poisson_kernel_gaussian_oracle() {
        for (x, t) in [(0.0, 0.7), (1.3, 0.4), (5.0, 0.9), (9.0, 2.0)] {
            let got = poisson_kernel(x, t, 2.0).unwrap();
            let want = gaussian_l(x, t);
            // tolerance anchored to the kernel's own scale: the two-branch
            // split limits absolute accuracy in deep Gaussian tails
            let scale0 = gaussian_l(0.0, t).norm();
            assert!(
                (got - want).norm() <= 1e-8 * want.norm() + 1e-11 * scale0,
                "x={x} t={t}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn poisson_scaling_identity() {
        for (x, t, a) in [
            (3.0, 0.2, 0.7),
            (0.5, 0.03, 0.5),
            (8.0, 0.6, 1.4),
            (2.0, 0.11, 2.0),
            (-4.0, 0.35, 1.0),
        ] {
            let lhs = poisson_kernel(x, t, a).unwrap();
            let s = t.powf(-1.0 / a);
            let rhs = poisson_kernel(x * s, 1.0, a).unwrap() * s;
            assert!(
                (lhs - rhs).norm() <= 1e-8 * rhs.norm().max(1e-14),
                "x={x} t={t} a={a}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn poisson_ratio_constant_in_t_at_origin() {
        let base = poisson_bound_ratio(0.0, 0.5, 0.8).unwrap();
        for t in [0.01, 0.07, 0.3, 0.9] {
            let r = poisson_bound_ratio(0.0, t, 0.8).unwrap();
            assert_relative_eq!(r, base, max_relative = 1e-7);
        }
    }

    #[test]
    fn heat_kernel_gaussian_oracle() {
        // a = 2: P(x,t,2) = (4πt)^{-1/2} e^{-x²/(4t)}
        for (x, t) in [(0.0, 0.3), (1.0, 0.3), (2.5, 0.08)] {
            let (p, _) = fractional_heat_kernel(x, t, 2.0).unwrap();
            let want = (4.0 * PI * t).sqrt().recip() * (-x * x / (4.0 * t)).exp();
            assert_relative_eq!(p, want, max_relative = 1e-8);
        }
    }

    #[test]
    fn heat_kernel_cauchy_oracle() {
        // a = 1: P(x,t,1) = (1/π) t/(t²+x²)
        for (x, t) in [(0.0, 0.5), (0.7, 0.2), (3.0, 0.9), (20.0, 0.05)] {
            let (p, _) = fractional_heat_kernel(x, t, 1.0).unwrap();
            let want = t / (PI * (t * t + x * x));
            assert_relative_eq!(p, want, max_relative = 1e-8);
        }
    }

    #[test]
    fn heat_kernel_positive_for_stable_orders() {
        // points kept clear of the deep Gaussian tail (a = 2 decays like
        // e^{-x²/4t}, below quadrature resolution for x²/4t ≳ 40)
        for a in [0.4, 0.8, 1.0, 1.5, 2.0] {
            for (x, t) in [(0.0, 0.4), (0.9, 0.2), (4.0, 0.7), (11.0, 1.3)] {
                let (p, _) = fractional_heat_kernel(x, t, a).unwrap();
                assert!(p > 0.0, "P({x},{t},{a}) = {p}");
            }
        }
        // heavy algebraic tails for a < 2 stay positive far out
        for a in [0.4, 0.9, 1.5] {
            let (p, _) = fractional_heat_kernel(40.0, 0.05, a).unwrap();
            assert!(p > 0.0, "P(40,0.05,{a}) = {p}");
        }
    }

    #[test]
    fn heat_ratio_finite() {
        let mut sup = 0.0f64;
        for a in [0.5, 1.0, 2.0] {
            for t in [0.01, 0.1, 1.0] {
                for x in [0.0, 0.5, 3.0, 20.0] {
                    sup = sup.max(heat_bound_ratio(x, t, a).unwrap());
                }
            }
        }
        assert!(sup.is_finite() && sup > 0.0);
    }

    #[test]
    fn bessel_cauchy_oracle() {
        // σ = 2 reduces to ∫ e^{ixξ}/(1+ξ²) dξ = π e^{-|x|}
        for x in [0.3, 1.0, 4.0] {
            let got = bessel_kernel_raw(x, 2.0).unwrap();
            assert_relative_eq!(got, PI * (-x.abs()).exp(), max_relative = 1e-9);
        }
    }

    #[test]
    fn bessel_ratio_bounded_near_zero() {
        let sigma = 0.5;
        let mut vals = Vec::new();
        for k in 1..=20 {
            let x = 2f64.powi(-k);
            vals.push(bessel_kernel_check(x, sigma).unwrap());
        }
        let sup = vals.iter().cloned().fold(0.0f64, f64::max);
        let inf = vals.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(sup.is_finite() && sup < 20.0, "sup = {sup}");
        // the ratio approaches the Riesz constant; it must not blow up or die
        assert!(inf > 0.05, "inf = {inf}");
    }

    #[test]
    fn bessel_ratio_flattens_towards_sigma_one() {
        // σ → 1⁻: the kernel stays integrable near 0 and the ratio levels
        // off along the dyadic sweep — per-octave relative increments shrink
        let sigma = 0.95;
        let v: Vec<f64> = (1..=20)
            .map(|k| bessel_kernel_check(2f64.powi(-k), sigma).unwrap())
            .collect();
        assert!(v.windows(2).all(|w| w[1] > w[0]), "not monotone: {v:?}");
        let rel: Vec<f64> = v.windows(2).map(|w| (w[1] - w[0]) / w[1]).collect();
        assert!(
            rel.windows(2).all(|w| w[1] < w[0] * (1.0 + 1e-9)),
            "increments not shrinking: {rel:?}"
        );
        assert!(*rel.last().unwrap() < 0.05, "still moving: {rel:?}");
        assert!(v.iter().all(|r| r.is_finite() && *r < 50.0));
    }

    #[test]
    fn bessel_rejects_bad_input() {
        assert!(bessel_kernel_check(0.0, 0.5).is_err());
        assert!(bessel_kernel_check(0.5, 1.2).is_err());
    }

    fn test_prm() -> OscillatoryKernelParams {
        OscillatoryKernelParams::new(0.5, 0.25, 0.4, 0.5, 2.0, 1024.0).unwrap()
    }

    #[test]
    fn lambda_block_refinement_stable() {
        let prm = test_prm();
        let cut = CutoffFamily::standard();
        let m = 16.0;
        let x = 3.7;
        let coarse = lambda_m(x, &prm, m, &cut).unwrap();
        // rebuild at quadruple resolution through a larger fake x_max
        let fine = lambda_table(&prm, m, &cut, 4.0 * x).unwrap().eval_cos(x);
        assert!((coarse - fine).norm() < 1e-9 * coarse.norm().max(1e-12));
    }

    #[test]
    fn lambda_origin_mass_bound() {
        // t = 0 (t1 = t2): |Λ_M(0)| ≤ ∫ g_M ≤ C·M^{1-α}
        let cut = CutoffFamily::standard();
        let prm = OscillatoryKernelParams::new(0.3, 0.3, 0.4, 0.5, 2.0, 4096.0).unwrap();
        for m in [1.0, 8.0, 64.0, 512.0] {
            let v = lambda_m(0.0, &prm, m, &cut).unwrap();
            let mass = lambda_m_mass(&prm, m, &cut).unwrap();
            assert!(v.norm() <= mass * (1.0 + 1e-9));
            assert!(mass <= 4.0 * m.powf(1.0 - prm.alpha));
        }
    }

    #[test]
    fn lambda_real_for_equal_times() {
        // t1 = t2 makes the integrand real and even: Λ_M real, even in x
        let cut = CutoffFamily::standard();
        let prm = OscillatoryKernelParams::new(0.4, 0.4, 0.3, 0.5, 2.0, 1024.0).unwrap();
        let v_plus = lambda_m(1.3, &prm, 8.0, &cut).unwrap();
        let v_minus = lambda_m(-1.3, &prm, 8.0, &cut).unwrap();
        assert!((v_plus - v_minus).norm() < 1e-12);
        assert!(v_plus.im.abs() < 1e-12 * v_plus.re.abs().max(1e-12));
        assert!((v_plus.conj() - v_minus).norm() < 1e-10);
    }

    #[test]
    fn lambda_far_zone_decay() {
        let prm = test_prm();
        let cut = CutoffFamily::standard();
        for m in [8.0f64, 64.0] {
            let r_crit = 2f64.powf(2.0 - prm.a) * m.powf(prm.a - 1.0) * prm.t().abs();
            let mut ratios = Vec::new();
            for mult in [2.0, 4.0, 8.0, 16.0] {
                let x = (r_crit * mult).max(mult / m);
                let v = lambda_m(x, &prm, m, &cut).unwrap().norm();
                ratios.push(v * (1.0 + m * x).powi(2) / m.powf(1.0 - prm.alpha));
            }
            let sup = ratios.iter().cloned().fold(0.0f64, f64::max);
            assert!(sup < 50.0, "far-zone ratio {sup} at M = {m}");
        }
    }

    #[test]
    fn oscillatory_kernel_is_dyadic_sum() {
        let prm = OscillatoryKernelParams::new(0.5, 0.25, 0.4, 0.5, 2.0, 64.0).unwrap();
        let cut = CutoffFamily::standard();
        for x in [0.0, 0.31, 1.7] {
            let whole = oscillatory_kernel(x, &prm, &cut).unwrap();
            let mut sum = Complex64::new(0.0, 0.0);
            for m in CutoffFamily::dyadic_scales(2.0 * prm.n_cap) {
                sum += lambda_m(x, &prm, m, &cut).unwrap();
            }
            assert!(
                (whole - sum).norm() <= 1e-6 * whole.norm().max(1e-9),
                "x = {x}: {whole} vs {sum}"
            );
        }
    }

    #[test]
    fn oscillatory_kernel_origin_positive_bound() {
        // x = 0, t1 = t2: real positive, below the modulus-integral bound
        let prm = OscillatoryKernelParams::new(0.35, 0.35, 0.45, 0.5, 2.0, 256.0).unwrap();
        let cut = CutoffFamily::standard();
        let v = oscillatory_kernel(0.0, &prm, &cut).unwrap();
        assert!(v.im.abs() < 1e-10 * v.re);
        assert!(v.re > 0.0);
        // modulus bound ∫ (1+ξ²)^{-α/2} e^{-ε|ξ|^a} dξ over ℝ by wide quadrature
        let eps = prm.epsilon();
        let bound = {
            let n = 400_000;
            let h = 4000.0 / n as f64;
            let mut s = 0.0;
            for k in 0..n {
                let xi = (k as f64 + 0.5) * h;
                s += (1.0 + xi * xi).powf(-prm.alpha / 2.0) * (-eps * xi.powf(prm.a)).exp();
            }
            2.0 * s * h
        };
        assert!(v.re <= bound * (1.0 + 1e-6));
    }

    #[test]
    fn fixed_time_blocks_stabilize() {
        // at a fixed time pair the per-block norms decay and the partial
        // sums are Cauchy; with α near 1 the decay is at least ~M^{-0.8}
        let cut = CutoffFamily::standard();
        let prm = OscillatoryKernelParams::new(0.5, 0.25, 0.999, 0.5, 2.0, 512.0).unwrap();
        let rows = lambda_l1_partial_sums(&prm, &cut, 64.0).unwrap();
        assert!(rows.windows(2).all(|w| w[1].1 < w[0].1), "terms not decaying");
        let tail = &rows[2..];
        let fit = crate::regression::fit_log_log(
            &tail.iter().map(|r| r.0).collect::<Vec<_>>(),
            &tail.iter().map(|r| r.1).collect::<Vec<_>>(),
        )
        .unwrap();
        assert!(fit.slope <= -0.8, "tail slope {}", fit.slope);
    }

    #[test]
    fn oscillatory_local_bound_ratio_bounded() {
        // |K(x)| / (|x|^{α-1} + |x|^{-σ}) stays bounded on 0 < |x| ≤ 1,
        // uniformly over sampled time pairs (0 < a < 1, γ > 1 regime)
        let (a, gamma, alpha) = (0.5, 2.0, 0.4);
        let cut = CutoffFamily::standard();
        let mut sup = 0.0f64;
        for k in [0, 2, 5, 9, 14, 20] {
            let x = 2f64.powi(-k);
            let bound = local_kernel_bound(x, alpha, gamma, a).unwrap();
            for j in [1, 3, 6, 9] {
                let t1 = 2f64.powi(-j);
                let prm =
                    OscillatoryKernelParams::new(t1, t1 / 2.0, alpha, a, gamma, 256.0).unwrap();
                let v = oscillatory_kernel(x, &prm, &cut).unwrap().norm();
                sup = sup.max(v / bound);
            }
        }
        assert!(sup.is_finite() && sup < 10.0, "local bound ratio sup {sup}");
    }

    #[test]
    fn sigma_exponent_examples() {
        // arbitrary-precision arithmetic on the formula gives 0.9 and exactly 1
        let s1 = sigma_exponent(0.5, 2.0, 0.2).unwrap();
        assert_relative_eq!(s1, 0.9, max_relative = 1e-12);
        let s2 = sigma_exponent(0.5, 2.0, 0.125).unwrap();
        assert_relative_eq!(s2, 1.0, max_relative = 1e-12);
        assert!(sigma_exponent(1.0, 2.0, 0.3).is_err());
        assert!(sigma_exponent(2.0, 2.0, 0.3).is_err()); // (a-1)γ = a
    }

    #[test]
    fn sigma_crosses_one_at_crossover() {
        // for 0 < a < 1, γ > 1: σ < 1 iff α > (a/2)(1-1/γ)
        for (a, gamma) in [(0.5, 2.0), (0.3, 1.5), (0.8, 4.0)] {
            let star = alpha_crossover(a, gamma);
            assert!(sigma_exponent(a, gamma, star + 0.05).unwrap() < 1.0);
            assert!(sigma_exponent(a, gamma, star - 0.05).unwrap() > 1.0);
            assert_relative_eq!(
                sigma_exponent(a, gamma, star).unwrap(),
                1.0,
                max_relative = 1e-10
            );
        }
    }

    #[test]
    fn sigma_monotone_in_alpha_for_small_a() {
        let (a, gamma) = (0.5, 2.0);
        let mut prev = f64::INFINITY;
        for k in 0..10 {
            let alpha = 0.05 + 0.09 * k as f64;
            let s = sigma_exponent(a, gamma, alpha).unwrap();
            assert!(s < prev);
            prev = s;
        }
    }

    #[test]
    fn local_bound_a1_example() {
        // a=1, γ=2, α=0.6, x=0.5 → 0.5^{-0.4} + 0.5^{-0.8} ≈ 3.0606
        let k = local_kernel_bound(0.5, 0.6, 2.0, 1.0).unwrap();
        assert_relative_eq!(
            k,
            0.5f64.powf(-0.4) + 0.5f64.powf(-0.8),
            max_relative = 1e-14
        );
        assert!((k - 3.0606).abs() < 1e-4);
    }

    #[test]
    fn local_bound_small_gamma_power() {
        // γ < 1, a ∈ (0,1): K(x) = |x|^{α-1}, so K(1) = 1
        let k = local_kernel_bound(1.0, 0.37, 0.6, 0.44).unwrap();
        assert_relative_eq!(k, 1.0, max_relative = 1e-15);
    }

    #[test]
    fn local_bound_integrable_above_crossover() {
        // ∫_0^1 K < ∞ when α > crossover: midpoint quadrature on a dyadic mesh stays finite
        let (a, gamma) = (0.5, 2.0);
        let alpha = alpha_crossover(a, gamma) + 0.075;
        let mut total = 0.0;
        let mut lo = 2f64.powi(-40);
        while lo < 1.0 {
            let hi = (2.0 * lo).min(1.0);
            let mid = 0.5 * (lo + hi);
            total += local_kernel_bound(mid, alpha, gamma, a).unwrap() * (hi - lo);
            lo = hi;
        }
        assert!(total.is_finite() && total < 100.0, "∫K ≈ {total}");
    }

    #[test]
    fn local_bound_regime_errors() {
        assert!(matches!(
            local_kernel_bound(0.5, 0.3, 3.0, 2.0),
            Err(Error::UnsupportedRegime(_))
        )); // a>1, γ ≥ a/(a-1)
        assert!(local_kernel_bound(0.0, 0.5, 2.0, 0.5).is_err());
    }
}
