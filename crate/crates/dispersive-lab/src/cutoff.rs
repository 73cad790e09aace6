//! Smooth compactly supported cutoffs.
//!
//! Everything is built from one C^∞ transition `smooth_step`, so the low
//! frequency cutoff χ, the dyadic annulus bump η and the global even bump μ
//! share a single profile. η is defined by the telescoping difference
//! `η(ξ) = χ(ξ/2) − χ(ξ)`, which makes the dyadic partition of unity
//!
//! ```text
//! χ(ξ) + Σ_{M ≥ 1 dyadic} η(ξ/M) = 1
//! ```
//!
//! hold *exactly* (finitely many terms contribute at any ξ).

/// C^∞ monotone step: 0 for `u ≤ 0`, 1 for `u ≥ 1`.
fn smooth_step(u: f64) -> f64 {
    if u <= 0.0 {
        0.0
    } else if u >= 1.0 {
        1.0
    } else {
        let a = (-1.0 / u).exp();
        let b = (-1.0 / (1.0 - u)).exp();
        a / (a + b)
    }
}

/// Even C^∞ plateau bump: 1 on `|u| ≤ plateau`, 0 on `|u| ≥ support`.
#[derive(Debug, Clone, Copy)]
pub struct Bump {
    plateau: f64,
    support: f64,
}

impl Bump {
    /// `0 < plateau < support` is required; panics otherwise (the crate only
    /// constructs bumps from fixed internal radii).
    pub fn new(plateau: f64, support: f64) -> Self {
        assert!(
            plateau > 0.0 && support > plateau,
            "bump radii must satisfy 0 < plateau < support"
        );
        Bump { plateau, support }
    }

    pub fn plateau(&self) -> f64 {
        self.plateau
    }

    pub fn support(&self) -> f64 {
        self.support
    }

    pub fn eval(&self, u: f64) -> f64 {
        let r = u.abs();
        if r <= self.plateau {
            1.0
        } else if r >= self.support {
            0.0
        } else {
            smooth_step((self.support - r) / (self.support - self.plateau))
        }
    }
}

/// The cutoff triple (χ, η, μ) used by truncations and dyadic decompositions.
///
/// * `chi`: 1 on `[-1,1]`, supported in `[-2,2]`.
/// * `eta`: annulus bump supported in `1 ≤ |ξ| ≤ 4`, values in `[0,1]`.
/// * `mu`: compactly supported positive even bump (same profile as χ), the
///   Schwartz-class surrogate multiplied in as `μ(ξ/N)`.
#[derive(Debug, Clone, Copy)]
pub struct CutoffFamily {
    chi: Bump,
    mu: Bump,
}

impl Default for CutoffFamily {
    fn default() -> Self {
        CutoffFamily::standard()
    }
}

impl CutoffFamily {
    pub fn standard() -> Self {
        CutoffFamily {
            chi: Bump::new(1.0, 2.0),
            mu: Bump::new(1.0, 2.0),
        }
    }

    /// Low-frequency cutoff χ.
    pub fn chi(&self, xi: f64) -> f64 {
        self.chi.eval(xi)
    }

    /// Dyadic annulus bump η(ξ) = χ(ξ/2) − χ(ξ), supported in 1 ≤ |ξ| ≤ 4.
    pub fn eta(&self, xi: f64) -> f64 {
        self.chi.eval(xi / 2.0) - self.chi.eval(xi)
    }

    /// Global even bump μ.
    pub fn mu(&self, u: f64) -> f64 {
        self.mu.eval(u)
    }

    /// Window used by the truncated propagator: 1 on `[-1/2, 1/2]`,
    /// supported in `[-1, 1]`.
    pub fn window(&self, u: f64) -> f64 {
        self.chi.eval(2.0 * u)
    }

    /// χ(ξ) + Σ_{M = 1,2,4,...,m_max} η(ξ/M).
    pub fn dyadic_partition(&self, xi: f64, m_max: f64) -> f64 {
        let mut sum = self.chi(xi);
        let mut m = 1.0;
        while m <= m_max {
            sum += self.eta(xi / m);
            m *= 2.0;
        }
        sum
    }

    /// Dyadic scales M = 1, 2, 4, ..., `m_max`.
    pub fn dyadic_scales(m_max: f64) -> Vec<f64> {
        let mut out = Vec::new();
        let mut m = 1.0;
        while m <= m_max {
            out.push(m);
            m *= 2.0;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chi_plateau_and_support() {
        let c = CutoffFamily::standard();
        assert_eq!(c.chi(0.0), 1.0);
        assert_eq!(c.chi(1.0), 1.0);
        assert_eq!(c.chi(-0.7), 1.0);
        assert_eq!(c.chi(2.0), 0.0);
        assert_eq!(c.chi(-3.1), 0.0);
        let mid = c.chi(1.5);
        assert!(mid > 0.0 && mid < 1.0);
    }

    #[test]
    fn eta_annulus() {
        let c = CutoffFamily::standard();
        for xi in [0.0, 0.5, 0.99] {
            assert_eq!(c.eta(xi), 0.0);
        }
        for xi in [4.0, 5.0, -4.5] {
            assert_eq!(c.eta(xi), 0.0);
        }
        for xi in [1.5, 2.0, 3.0, -2.5] {
            let v = c.eta(xi);
            assert!(v >= 0.0 && v <= 1.0);
        }
        assert!(c.eta(2.0) > 0.9);
    }

    #[test]
    fn partition_of_unity_exact_up_to_2_pow_16() {
        let c = CutoffFamily::standard();
        let m_max = 2f64.powi(17);
        let mut xi = 0.001;
        while xi <= 65536.0 {
            for sign in [-1.0, 1.0] {
                let s = c.dyadic_partition(sign * xi, m_max);
                assert!(
                    (s - 1.0).abs() <= 1e-12,
                    "partition failed at xi={}: {}",
                    sign * xi,
                    s
                );
            }
            xi *= 1.7;
        }
        assert!((c.dyadic_partition(0.0, m_max) - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn smooth_step_is_c2_near_edges() {
        // second differences stay bounded through the transition points
        let h = 1e-4;
        for u0 in [0.0, 1.0, 0.5] {
            let f = |u: f64| smooth_step(u);
            let second = (f(u0 + h) - 2.0 * f(u0) + f(u0 - h)) / (h * h);
            assert!(second.abs() < 50.0);
        }
    }

    #[test]
    fn window_plateau() {
        let c = CutoffFamily::standard();
        assert_eq!(c.window(0.5), 1.0);
        assert_eq!(c.window(-0.25), 1.0);
        assert_eq!(c.window(1.0), 0.0);
        assert!(c.window(0.8) > 0.0 && c.window(0.8) < 1.0);
    }
}
