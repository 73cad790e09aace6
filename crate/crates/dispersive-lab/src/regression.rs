//! Least-squares slope fitting for the scaling experiments.
//!
//! Every sharpness and summability scan in this crate reduces to "measure a
//! quantity along a dyadic ladder, fit a line in log-log coordinates, compare
//! the slope with the predicted exponent". The fit reports slope, intercept
//! and R² so that acceptance checks can insist on clean power laws.

use crate::error::{ensure, Result};
use serde::Serialize;

/// Ordinary least-squares line fit.
#[derive(Debug, Clone, Serialize)]
pub struct Regression {
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
    pub n: usize,
}

/// Fit `y = slope * x + intercept`.
pub fn fit_line(xs: &[f64], ys: &[f64]) -> Result<Regression> {
    ensure(xs.len() == ys.len(), "x/y length mismatch")?;
    ensure(xs.len() >= 2, "need at least two points to fit a line")?;
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    ensure(sxx > 0.0, "degenerate abscissa (all x equal)")?;
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = ys.iter().map(|y| (y - my) * (y - my)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, y)| {
            let e = y - (slope * x + intercept);
            e * e
        })
        .sum();
    let r2 = if ss_tot == 0.0 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Ok(Regression {
        slope,
        intercept,
        r2,
        n: xs.len(),
    })
}

/// Fit `log y = slope * log x + c`. Inputs must be strictly positive.
pub fn fit_log_log(xs: &[f64], ys: &[f64]) -> Result<Regression> {
    ensure(
        xs.iter().chain(ys).all(|v| *v > 0.0 && v.is_finite()),
        "log-log fit needs positive finite data",
    )?;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    fit_line(&lx, &ly)
}

/// Machine-readable outcome of one scaling experiment.
#[derive(Debug, Clone, Serialize)]
pub struct RegressionVerdict {
    pub predicted: f64,
    pub measured: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl RegressionVerdict {
    /// Relative comparison against a predicted exponent.
    pub fn relative(predicted: f64, measured: f64, tol: f64) -> Self {
        let pass = (measured - predicted).abs() <= tol * predicted.abs().max(f64::MIN_POSITIVE);
        RegressionVerdict {
            predicted,
            measured,
            tolerance: tol,
            pass,
        }
    }

    /// Absolute comparison.
    pub fn absolute(predicted: f64, measured: f64, tol: f64) -> Self {
        RegressionVerdict {
            predicted,
            measured,
            tolerance: tol,
            pass: (measured - predicted).abs() <= tol,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_power_law_recovered() {
        let xs: Vec<f64> = (1..=8).map(|k| 2f64.powi(-k)).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 3.0 * x.powf(-0.75)).collect();
        let fit = fit_log_log(&xs, &ys).unwrap();
        assert!((fit.slope + 0.75).abs() < 1e-12);
        assert!(fit.r2 > 1.0 - 1e-12);
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(fit_log_log(&[1.0, 2.0], &[1.0, 0.0]).is_err());
    }
}
