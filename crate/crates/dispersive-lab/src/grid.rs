//! Grid and spectral data types and the discrete Fourier contract.
//!
//! The crate fixes the convention
//!
//! ```text
//! f(x)  = ∫ f̂(ξ) e^{ixξ} dξ            (inversion carries no 2π)
//! f̂(ξ) = (1/2π) ∫ f(x) e^{-ixξ} dx
//! ```
//!
//! so multiplier formulas transcribe literally, and Parseval reads
//! `∫|f|² dx = 2π ∫|f̂|² dξ`.
//!
//! Transforms between a grid of `n` points with spacing `dx` and a frequency
//! grid with spacing `dxi = 2π/(n·dx)` are exact discrete inverses of each
//! other (up to roundoff) and are evaluated with an FFT. `inverse_transform`
//! also accepts arbitrary target grids, falling back to a direct
//! `O(n_x · n_ξ)` summation.

use num_complex::Complex64;
use rustfft::FftPlanner;

use crate::error::{ensure, Result};
use crate::numeric::pairwise_sum;

/// Target grid for an inverse transform: `x_j = x0 + j·dx`, `j = 0..n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x0: f64,
    pub dx: f64,
    pub n: usize,
}

impl GridSpec {
    pub fn new(x0: f64, dx: f64, n: usize) -> Result<Self> {
        ensure(dx > 0.0 && dx.is_finite(), "grid spacing must be positive")?;
        ensure(n > 0, "grid must be non-empty")?;
        Ok(GridSpec { x0, dx, n })
    }

    /// Symmetric grid over `[-l, l]`: midpoint-shifted so the point set is
    /// symmetric under x ↦ -x and the last point lies within `dx/2` of `+l`.
    pub fn symmetric(l: f64, n: usize) -> Result<Self> {
        ensure(l > 0.0, "half-width must be positive")?;
        ensure(n > 0, "grid must be non-empty")?;
        let dx = 2.0 * l / n as f64;
        Ok(GridSpec {
            x0: -l + dx / 2.0,
            dx,
            n,
        })
    }

    /// Symmetric grid over `[-l, l)` containing x = 0 exactly (for even `n`).
    pub fn centered(l: f64, n: usize) -> Result<Self> {
        ensure(l > 0.0, "half-width must be positive")?;
        ensure(n > 0, "grid must be non-empty")?;
        let dx = 2.0 * l / n as f64;
        Ok(GridSpec { x0: -l, dx, n })
    }

    pub fn point(&self, j: usize) -> f64 {
        self.x0 + self.dx * j as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n).map(|j| self.point(j))
    }
}

/// Complex-valued function sampled on a uniform spatial grid.
#[derive(Debug, Clone)]
pub struct GridFunction {
    pub x0: f64,
    pub dx: f64,
    pub values: Vec<Complex64>,
}

/// Complex-valued function sampled on a uniform frequency grid; values are
/// treated as zero outside the sampled window.
#[derive(Debug, Clone)]
pub struct SpectrumFunction {
    pub xi0: f64,
    pub dxi: f64,
    pub values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(x0: f64, dx: f64, values: Vec<Complex64>) -> Result<Self> {
        ensure(dx > 0.0 && dx.is_finite(), "dx must be positive")?;
        ensure(!values.is_empty(), "values must be non-empty")?;
        ensure(
            values.iter().all(|z| z.re.is_finite() && z.im.is_finite()),
            "values must be finite",
        )?;
        Ok(GridFunction { x0, dx, values })
    }

    pub fn sample(spec: &GridSpec, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        GridFunction::new(spec.x0, spec.dx, spec.points().map(f).collect())
    }

    pub fn spec(&self) -> GridSpec {
        GridSpec {
            x0: self.x0,
            dx: self.dx,
            n: self.values.len(),
        }
    }

    pub fn point(&self, j: usize) -> f64 {
        self.x0 + self.dx * j as f64
    }

    /// Discrete L² norm: `(Σ |f|² dx)^{1/2}`.
    pub fn l2_norm(&self) -> f64 {
        let sq: Vec<f64> = self.values.iter().map(|z| z.norm_sqr()).collect();
        (pairwise_sum(&sq) * self.dx).sqrt()
    }

    /// Sup norm over the grid.
    pub fn sup_norm(&self) -> f64 {
        self.values.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl SpectrumFunction {
    pub fn new(xi0: f64, dxi: f64, values: Vec<Complex64>) -> Result<Self> {
        ensure(dxi > 0.0 && dxi.is_finite(), "dxi must be positive")?;
        ensure(!values.is_empty(), "values must be non-empty")?;
        ensure(
            values.iter().all(|z| z.re.is_finite() && z.im.is_finite()),
            "values must be finite",
        )?;
        Ok(SpectrumFunction { xi0, dxi, values })
    }

    pub fn sample(xi0: f64, dxi: f64, n: usize, f: impl Fn(f64) -> Complex64) -> Result<Self> {
        SpectrumFunction::new(
            xi0,
            dxi,
            (0..n).map(|k| f(xi0 + dxi * k as f64)).collect(),
        )
    }

    pub fn point(&self, k: usize) -> f64 {
        self.xi0 + self.dxi * k as f64
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.values.len()).map(|k| self.point(k))
    }

    /// Spectral L² norm `(Σ |f̂|² dξ)^{1/2}`.
    pub fn l2_norm(&self) -> f64 {
        let sq: Vec<f64> = self.values.iter().map(|z| z.norm_sqr()).collect();
        (pairwise_sum(&sq) * self.dxi).sqrt()
    }

    /// The grid on which an FFT-based inverse lands: `n` points with
    /// `dx·dxi = 2π/n`, centered so that x = 0 is a node for even `n`.
    pub fn conjugate_grid(&self) -> GridSpec {
        let n = self.values.len();
        let dx = 2.0 * std::f64::consts::PI / (n as f64 * self.dxi);
        GridSpec {
            x0: -(n as f64 / 2.0).floor() * dx,
            dx,
            n,
        }
    }

    /// Pointwise multiply by `m(ξ)`.
    pub fn multiplied(&self, m: impl Fn(f64) -> Complex64) -> SpectrumFunction {
        SpectrumFunction {
            xi0: self.xi0,
            dxi: self.dxi,
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(k, v)| v * m(self.point(k)))
                .collect(),
        }
    }

    /// Zero-pad symmetrically to `n_new ≥ n` samples (same `dxi`). Used to
    /// refine the conjugate grid before an FFT inverse.
    pub fn zero_padded(&self, n_new: usize) -> SpectrumFunction {
        let n = self.values.len();
        if n_new <= n {
            return self.clone();
        }
        let extra = n_new - n;
        let left = extra / 2;
        let mut values = vec![Complex64::new(0.0, 0.0); n_new];
        values[left..left + n].copy_from_slice(&self.values);
        SpectrumFunction {
            xi0: self.xi0 - left as f64 * self.dxi,
            dxi: self.dxi,
            values,
        }
    }
}

/// Discrete approximation of `f̂(ξ) = (1/2π) ∫ f(x) e^{-ixξ} dx` on the
/// conjugate frequency window `dxi = 2π/(n·dx)`, centered at 0.
pub fn forward_transform(f: &GridFunction) -> Result<SpectrumFunction> {
    let n = f.values.len();
    ensure(n > 0, "empty input")?;
    let dx = f.dx;
    let dxi = 2.0 * std::f64::consts::PI / (n as f64 * dx);
    let xi0 = -(n as f64 / 2.0).floor() * dxi;

    // S(k) = Σ_j f_j e^{-i x_j ξ_k} = e^{-i x0 ξ_k} · DFT_k[f_j e^{-i j dx ξ0}]
    let mut buf: Vec<Complex64> = f
        .values
        .iter()
        .enumerate()
        .map(|(j, v)| v * Complex64::from_polar(1.0, -(j as f64) * dx * xi0))
        .collect();
    FftPlanner::new().plan_fft_forward(n).process(&mut buf);

    let scale = dx / (2.0 * std::f64::consts::PI);
    let values = buf
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let xi_k = xi0 + dxi * k as f64;
            v * Complex64::from_polar(scale, -f.x0 * xi_k)
        })
        .collect();
    SpectrumFunction::new(xi0, dxi, values)
}

fn fft_compatible(g: &SpectrumFunction, grid: &GridSpec) -> bool {
    let n = g.values.len();
    grid.n == n
        && ((grid.dx * g.dxi * n as f64) / (2.0 * std::f64::consts::PI) - 1.0).abs() < 1e-9
}

/// Discrete approximation of `f(x) = Σ f̂(ξ_k) e^{ixξ_k} dξ` on `grid`.
///
/// Takes the FFT path when `grid` is conjugate to the spectrum
/// (`n` equal and `dx·dxi·n = 2π`); otherwise evaluates the sum directly.
pub fn inverse_transform(g: &SpectrumFunction, grid: &GridSpec) -> Result<GridFunction> {
    ensure(!g.values.is_empty(), "empty input")?;
    if fft_compatible(g, grid) {
        inverse_fft(g, grid)
    } else {
        Ok(inverse_direct(g, grid))
    }
}

fn inverse_fft(g: &SpectrumFunction, grid: &GridSpec) -> Result<GridFunction> {
    let n = g.values.len();
    // f(x_j) = dxi e^{i x_j ξ0} Σ_k [g_k e^{i x0 k dxi}] e^{2πi jk/n}
    let mut buf: Vec<Complex64> = g
        .values
        .iter()
        .enumerate()
        .map(|(k, v)| v * Complex64::from_polar(1.0, grid.x0 * (k as f64) * g.dxi))
        .collect();
    FftPlanner::new().plan_fft_inverse(n).process(&mut buf);
    let values = buf
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let x_j = grid.point(j);
            v * Complex64::from_polar(g.dxi, x_j * g.xi0)
        })
        .collect();
    GridFunction::new(grid.x0, grid.dx, values)
}

fn inverse_direct(g: &SpectrumFunction, grid: &GridSpec) -> GridFunction {
    let values: Vec<Complex64> = grid
        .points()
        .map(|x| spectrum_value_at(g, x, |_| Complex64::new(1.0, 0.0)))
        .collect();
    GridFunction {
        x0: grid.x0,
        dx: grid.dx,
        values,
    }
}

/// `Σ_k g_k m(ξ_k) e^{ixξ_k} dξ` for one point `x`, with the phase advanced by
/// a stable recurrence (exact phase refresh every 4096 steps).
pub fn spectrum_value_at(
    g: &SpectrumFunction,
    x: f64,
    m: impl Fn(f64) -> Complex64,
) -> Complex64 {
    let step = Complex64::from_polar(1.0, x * g.dxi);
    let mut phase = Complex64::from_polar(1.0, x * g.xi0);
    let mut acc = Complex64::new(0.0, 0.0);
    for (k, v) in g.values.iter().enumerate() {
        if k % 4096 == 0 {
            phase = Complex64::from_polar(1.0, x * g.point(k));
        }
        acc += v * m(g.point(k)) * phase;
        phase *= step;
    }
    acc * g.dxi
}

/// `(Σ (1+ξ²)^s |g(ξ)|² dξ)^{1/2}` — the H^s norm read off the spectrum.
/// Negative `s` is allowed; the norm is monotone non-decreasing in `s`.
pub fn sobolev_norm(g: &SpectrumFunction, s: f64) -> Result<f64> {
    ensure(!g.values.is_empty(), "empty input")?;
    ensure(s.is_finite(), "s must be finite")?;
    let terms: Vec<f64> = g
        .values
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let xi = g.point(k);
            (1.0 + xi * xi).powf(s) * v.norm_sqr()
        })
        .collect();
    Ok((pairwise_sum(&terms) * g.dxi).sqrt())
}
