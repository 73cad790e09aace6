//! File formats: UTF-8 JSON for grid/spectrum/measure data, RFC-4180-style
//! CSV with `%.12e` floats for experiment output.
//!
//! Grid and spectrum functions share one schema,
//! `{"x0": …, "dx": …, "re": […], "im": […]}` (for a spectrum the keys hold
//! ξ0 and dξ); measures are `{"atoms": [{"x": …, "w": …}]}`.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::grid::{GridFunction, SpectrumFunction};
use crate::measure::{Atom, DiscreteMeasure};

#[derive(Debug, Serialize, Deserialize)]
pub struct SampledFunctionJson {
    pub x0: f64,
    pub dx: f64,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl SampledFunctionJson {
    fn from_parts(x0: f64, dx: f64, values: &[Complex64]) -> Self {
        SampledFunctionJson {
            x0,
            dx,
            re: values.iter().map(|z| z.re).collect(),
            im: values.iter().map(|z| z.im).collect(),
        }
    }

    fn values(&self) -> Result<Vec<Complex64>> {
        if self.re.len() != self.im.len() {
            return Err(invalid("re/im arrays differ in length"));
        }
        Ok(self
            .re
            .iter()
            .zip(&self.im)
            .map(|(r, i)| Complex64::new(*r, *i))
            .collect())
    }
}

impl From<&GridFunction> for SampledFunctionJson {
    fn from(f: &GridFunction) -> Self {
        SampledFunctionJson::from_parts(f.x0, f.dx, &f.values)
    }
}

impl From<&SpectrumFunction> for SampledFunctionJson {
    fn from(g: &SpectrumFunction) -> Self {
        SampledFunctionJson::from_parts(g.xi0, g.dxi, &g.values)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct AtomJson {
    x: f64,
    w: f64,
}

#[derive(Debug, Serialize, Deserialize)]
struct MeasureJson {
    atoms: Vec<AtomJson>,
}

fn parse_error(path: &Path, err: impl std::fmt::Display) -> Error {
    invalid(format!("{}: {}", path.display(), err))
}

pub fn read_spectrum(path: &Path) -> Result<SpectrumFunction> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let json: SampledFunctionJson =
        serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    SpectrumFunction::new(json.x0, json.dx, json.values()?)
}

pub fn read_grid_function(path: &Path) -> Result<GridFunction> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let json: SampledFunctionJson =
        serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    GridFunction::new(json.x0, json.dx, json.values()?)
}

pub fn read_measure(path: &Path) -> Result<DiscreteMeasure> {
    let text = fs::read_to_string(path).map_err(|e| parse_error(path, e))?;
    let json: MeasureJson = serde_json::from_str(&text).map_err(|e| parse_error(path, e))?;
    DiscreteMeasure::new(
        json.atoms
            .into_iter()
            .map(|a| Atom {
                position: a.x,
                weight: a.w,
            })
            .collect(),
    )
}

pub fn write_spectrum(path: &Path, g: &SpectrumFunction) -> Result<()> {
    let json = SampledFunctionJson::from(g);
    fs::write(path, serde_json::to_string(&json).expect("serializable"))
        .map_err(|e| parse_error(path, e))
}

pub fn write_grid_function(path: &Path, f: &GridFunction) -> Result<()> {
    let json = SampledFunctionJson::from(f);
    fs::write(path, serde_json::to_string(&json).expect("serializable"))
        .map_err(|e| parse_error(path, e))
}

pub fn write_measure(path: &Path, mu: &DiscreteMeasure) -> Result<()> {
    let json = MeasureJson {
        atoms: mu
            .atoms()
            .iter()
            .map(|a| AtomJson {
                x: a.position,
                w: a.weight,
            })
            .collect(),
    };
    fs::write(path, serde_json::to_string(&json).expect("serializable"))
        .map_err(|e| parse_error(path, e))
}

/// C-style `%.12e` formatting: fixed 12-digit mantissa, sign and two-digit
/// exponent, so identical runs produce byte-identical CSV.
pub fn fmt_e(v: f64) -> String {
    if !v.is_finite() {
        return if v.is_nan() {
            "nan".to_string()
        } else if v > 0.0 {
            "inf".to_string()
        } else {
            "-inf".to_string()
        };
    }
    let raw = format!("{:.12e}", v);
    let (mantissa, exp) = raw.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < 0 {
        format!("{mantissa}e-{:02}", -exp)
    } else {
        format!("{mantissa}e+{:02}", exp)
    }
}

/// Write a CSV file: header row plus rows of already-formatted cells.
pub fn write_csv(path: &Path, header: &str, rows: &[Vec<String>]) -> Result<()> {
    let mut out = String::with_capacity(rows.len() * 48 + header.len() + 2);
    out.push_str(header);
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    fs::write(path, out).map_err(|e| parse_error(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    #[test]
    fn fmt_e_shapes() {
        assert_eq!(fmt_e(0.0), "0.000000000000e+00");
        assert_eq!(fmt_e(1.0), "1.000000000000e+00");
        assert_eq!(fmt_e(-2.5e-3), "-2.500000000000e-03");
        assert_eq!(fmt_e(6.02214076e23), "6.022140760000e+23");
        assert_eq!(fmt_e(1.234567890123456e-120), "1.234567890123e-120");
    }

    #[test]
    fn spectrum_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("spec.json");
        let g = SpectrumFunction::sample(-2.0, 0.25, 16, |xi| Complex64::new(xi, -xi * xi))
            .unwrap();
        write_spectrum(&path, &g).unwrap();
        let back = read_spectrum(&path).unwrap();
        assert_eq!(back.xi0, g.xi0);
        assert_eq!(back.dxi, g.dxi);
        assert_eq!(back.values, g.values);
    }

    #[test]
    fn measure_round_trip() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("mu.json");
        let mu = DiscreteMeasure::cantor(4).unwrap();
        write_measure(&path, &mu).unwrap();
        let back = read_measure(&path).unwrap();
        assert_eq!(back.atoms(), mu.atoms());
    }

    #[test]
    fn schema_keys_are_stable() {
        let g = SpectrumFunction::sample(-1.0, 0.5, 2, |_| Complex64::new(1.0, 2.0)).unwrap();
        let text = serde_json::to_string(&SampledFunctionJson::from(&g)).unwrap();
        assert_eq!(text, r#"{"x0":-1.0,"dx":0.5,"re":[1.0,1.0],"im":[2.0,2.0]}"#);
        let mu = DiscreteMeasure::two_atoms(0.5).unwrap();
        let json = MeasureJson {
            atoms: mu
                .atoms()
                .iter()
                .map(|a| AtomJson {
                    x: a.position,
                    w: a.weight,
                })
                .collect(),
        };
        assert_eq!(
            serde_json::to_string(&json).unwrap(),
            r#"{"atoms":[{"x":0.0,"w":0.5},{"x":0.5,"w":0.5}]}"#
        );
    }

    #[test]
    fn rejects_mismatched_arrays() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("bad.json");
        std::fs::write(&path, r#"{"x0":0.0,"dx":0.1,"re":[1.0,2.0],"im":[0.0]}"#).unwrap();
        assert!(read_spectrum(&path).is_err());
    }
}
