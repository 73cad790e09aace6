//! Small numeric helpers shared across the crate.
//!
//! Summation is always performed in a fixed left-to-right pairwise order so
//! that every run (and every thread count) produces bit-identical results.

use num_complex::Complex64;

/// Pairwise (cascade) sum of a slice, left to right.
pub fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 8 {
        return v.iter().sum();
    }
    let mid = v.len() / 2;
    pairwise_sum(&v[..mid]) + pairwise_sum(&v[mid..])
}

/// Pairwise sum for complex slices.
pub fn pairwise_sum_c(v: &[Complex64]) -> Complex64 {
    if v.len() <= 8 {
        return v.iter().sum();
    }
    let mid = v.len() / 2;
    pairwise_sum_c(&v[..mid]) + pairwise_sum_c(&v[mid..])
}

/// Geometric grid of `n` points from `lo` to `hi` inclusive.
pub fn geomspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(lo > 0.0 && hi > lo && n >= 2);
    let ratio = (hi / lo).ln() / (n - 1) as f64;
    (0..n).map(|k| lo * (ratio * k as f64).exp()).collect()
}

/// Uniform grid of `n` points from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let h = (hi - lo) / (n - 1) as f64;
    (0..n).map(|k| lo + h * k as f64).collect()
}

/// Sup-norm discrepancy between two complex sequences, relative to the sup of
/// the reference. This is the comparison used when checking grid data against
/// closed forms: pointwise relative error is meaningless in Gaussian tails.
pub fn sup_rel_error(got: &[Complex64], want: &[Complex64]) -> f64 {
    assert_eq!(got.len(), want.len());
    let scale = want.iter().map(|z| z.norm()).fold(0.0_f64, f64::max);
    let diff = got
        .iter()
        .zip(want)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0_f64, f64::max);
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

/// `|got - want| / |want|`, guarding the zero reference.
pub fn rel_error(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        (got - want).abs() / want.abs()
    }
}

/// Next power of two at or above `x`.
pub fn next_pow2(x: f64) -> usize {
    let mut n = 1usize;
    while (n as f64) < x {
        n *= 2;
    }
    n
}
