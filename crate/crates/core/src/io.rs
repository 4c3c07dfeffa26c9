//! Coefficient and curve files.
//!
//! Every float is written with 17 significant digits, which round-trips
//! binary64 exactly.

use crate::coefficients::{gamma_of, CoefficientSet, Direction};
use crate::error::{Error, Result};
use crate::rational_eval::EvaluationCurve;
use crate::targets::{ApproxParams, TargetKind};
use crate::voigt::VoigtSample;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter};
use std::fs;
use std::io::{self, Write};
use std::path::Path;

pub const CURVE_HEADER: &str = "x,approx_re,approx_im,reference,abs_diff";
pub const VOIGT_HEADER: &str = "x,voigt_approx,voigt_ref,abs_diff";

/// Formats a float with 17 significant digits.
pub fn fmt17(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoefficientFile {
    a: f64,
    #[serde(rename = "M")]
    order: u32,
    #[serde(rename = "N")]
    max_index: usize,
    h: f64,
    sigma: f64,
    k: u32,
    delta: f64,
    direction: Direction,
    target: TargetKind,
    alpha: Vec<[f64; 2]>,
    beta: Vec<[f64; 2]>,
    gamma: Vec<f64>,
}

/// Pretty JSON with floats in `{:.16e}` form.
struct Digits17(PrettyFormatter<'static>);

impl Formatter for Digits17 {
    fn write_f64<W: ?Sized + Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(fmt17(value).as_bytes())
    }

    fn begin_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_array(writer)
    }

    fn end_array<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array(writer)
    }

    fn begin_array_value<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_array_value(writer, first)
    }

    fn end_array_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_array_value(writer)
    }

    fn begin_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object(writer)
    }

    fn end_object<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object(writer)
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, writer: &mut W, first: bool) -> io::Result<()> {
        self.0.begin_object_key(writer, first)
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.begin_object_value(writer)
    }

    fn end_object_value<W: ?Sized + Write>(&mut self, writer: &mut W) -> io::Result<()> {
        self.0.end_object_value(writer)
    }
}

fn pairs(values: &[Complex64]) -> Vec<[f64; 2]> {
    values.iter().map(|c| [c.re, c.im]).collect()
}

fn unpairs(values: Vec<[f64; 2]>) -> Vec<Complex64> {
    values.into_iter().map(|[re, im]| Complex64::new(re, im)).collect()
}

pub fn coefficients_to_string(coeffs: &CoefficientSet) -> Result<String> {
    let p = coeffs.params();
    let file = CoefficientFile {
        a: p.shift,
        order: p.order,
        max_index: p.max_index,
        h: p.step,
        sigma: p.sigma,
        k: p.surrogate_power,
        delta: p.margin,
        direction: coeffs.direction(),
        target: coeffs.target(),
        alpha: pairs(coeffs.alpha()),
        beta: pairs(coeffs.beta()),
        gamma: coeffs.gamma().to_vec(),
    };
    let mut buf = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut buf, Digits17(PrettyFormatter::new()));
    file.serialize(&mut ser)
        .map_err(|e| Error::Format(e.to_string()))?;
    buf.push(b'\n');
    String::from_utf8(buf).map_err(|e| Error::Format(e.to_string()))
}

pub fn coefficients_from_str(text: &str) -> Result<CoefficientSet> {
    let file: CoefficientFile =
        serde_json::from_str(text).map_err(|e| Error::Format(e.to_string()))?;
    let params = ApproxParams {
        shift: file.a,
        order: file.order,
        max_index: file.max_index,
        step: file.h,
        sigma: file.sigma,
        surrogate_power: file.k,
        margin: file.delta,
    };
    params
        .validate()
        .map_err(|e| Error::Format(e.to_string()))?;
    if file.gamma.len() != params.term_count() {
        return Err(Error::Format(format!(
            "gamma has {} entries, expected {}",
            file.gamma.len(),
            params.term_count()
        )));
    }
    for (m, &g) in file.gamma.iter().enumerate() {
        let expected = gamma_of(m + 1, &params)?;
        if (g - expected).abs() > 1e-12 * expected {
            return Err(Error::Format(format!(
                "gamma[{m}] = {g} is inconsistent with M and h (expected {expected})"
            )));
        }
    }
    CoefficientSet::from_parts(
        params,
        file.direction,
        file.target,
        unpairs(file.alpha),
        unpairs(file.beta),
    )
    .map_err(|e| Error::Format(e.to_string()))
}

pub fn write_coefficients(path: &Path, coeffs: &CoefficientSet) -> Result<()> {
    fs::write(path, coefficients_to_string(coeffs)?)?;
    Ok(())
}

pub fn read_coefficients(path: &Path) -> Result<CoefficientSet> {
    coefficients_from_str(&fs::read_to_string(path)?)
}

pub fn write_curve<W: Write>(mut out: W, curve: &EvaluationCurve) -> Result<()> {
    writeln!(out, "{CURVE_HEADER}")?;
    for i in 0..curve.len() {
        writeln!(
            out,
            "{},{},{},{},{}",
            fmt17(curve.abscissae[i]),
            fmt17(curve.approx[i].re),
            fmt17(curve.approx[i].im),
            fmt17(curve.reference[i]),
            fmt17(curve.abs_diff[i])
        )?;
    }
    Ok(())
}

pub fn write_voigt_curve<W: Write>(mut out: W, rows: &[VoigtSample]) -> Result<()> {
    writeln!(out, "{VOIGT_HEADER}")?;
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            fmt17(r.x),
            fmt17(r.approx),
            fmt17(r.reference),
            fmt17(r.abs_diff)
        )?;
    }
    Ok(())
}
