//! Voigt function `K(x, y) = (y / pi) int e^(-t^2) / (y^2 + (x - t)^2) dt`.
//!
//! [`voigt_residue`] sums the residues of the rational Gaussian approximant
//! against the Lorentzian kernel. [`voigt_quadrature`] integrates the
//! defining integral directly and serves as the reference.
//! [`voigt_inverse_route`] integrates the inverse-transform approximant
//! against the same kernel numerically.

use crate::coefficients::{CoefficientSet, Direction};
use crate::error::{Error, Result};
use crate::quadrature::integrate;
use crate::rational_eval::eval_inverse;
use crate::summation::ComplexCompensatedSum;
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Panel budget for the reference integral.
pub const MAX_PANELS: usize = 1_000_000;
/// Tolerance used when the reference accompanies a residue evaluation.
pub const REFERENCE_TOL: f64 = 1e-14;

const DENOMINATOR_FLOOR: f64 = 1e-300;

/// A point `(x, y)` with `y > 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoigtPoint {
    x: f64,
    y: f64,
}

impl VoigtPoint {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        if !x.is_finite() {
            return Err(Error::Validation(format!("x must be finite, got {x}")));
        }
        if !(y > 0.0 && y.is_finite()) {
            return Err(Error::Validation(format!("y must be finite and > 0, got {y}")));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }
}

/// Residue sum result. `value` is the real part; `imag_residual` is the
/// imaginary part left over by the complex arithmetic, which should be tiny.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoigtValue {
    pub value: f64,
    pub imag_residual: f64,
}

/// Residue form of the Voigt function built from forward coefficients of
/// `sqrt(pi) e^(-pi^2 t^2)`.
pub fn voigt_residue(coeffs: &CoefficientSet, p: VoigtPoint) -> Result<VoigtValue> {
    if coeffs.direction() != Direction::Forward {
        return Err(Error::Direction {
            operation: "voigt residue",
            expected: Direction::Forward.name(),
            found: coeffs.direction().name(),
        });
    }
    let params = coeffs.params();
    let (a, sigma) = (params.shift, params.sigma);
    let (x, y) = (p.x, p.y);
    let i = Complex64::i();
    let radius = 4.0 * PI * PI * (x * x + y * y);
    let z = Complex64::new(x, y);
    let pole_phase = (2.0 * PI * a * i * z).exp();
    let shifted = 2.0 * PI * z - i * sigma;

    let check = |den: Complex64, term: usize, which: usize| {
        if den.norm() < DENOMINATOR_FLOOR {
            Err(Error::Denominator { term, which })
        } else {
            Ok(den)
        }
    };

    let mut acc = ComplexCompensatedSum::new();
    for (m, (alpha, beta, gamma)) in coeffs.terms().enumerate() {
        let term = m + 1;
        let minus = Complex64::new(gamma, -sigma);
        let plus = Complex64::new(gamma, sigma);

        let d1 = check(gamma * (radius + 4.0 * PI * x * minus + minus * minus), term, 1)?;
        let n1 = Complex64::new(-a * sigma, -a * gamma).exp() * (beta - i * alpha * gamma);

        let d2 = check(gamma * (radius - 4.0 * PI * x * plus + plus * plus), term, 2)?;
        let n2 = i * Complex64::new(-a * sigma, a * gamma).exp() * (alpha * gamma - i * beta);

        let d3 = check(2.0 * PI * y * (gamma * gamma - shifted * shifted), term, 3)?;
        let n3 = i * pole_phase * (alpha * (2.0 * PI * Complex64::new(y, -x) - sigma) - beta);

        acc.add(n1 / d1 - n2 / d2 + n3 / d3);
    }
    let k = Complex64::new(0.0, 2.0 * PI * y) * acc.total();
    Ok(VoigtValue {
        value: k.re,
        imag_residual: k.im,
    })
}

/// Half-width `R` such that the Gaussian tails beyond `|t| > R` contribute
/// less than `budget` to `K(x, y)`.
fn gaussian_cutoff(y: f64, budget: f64) -> f64 {
    // Both tails together are bounded by e^(-R^2) / (pi y R).
    let mut r: f64 = 1.0;
    while (-r * r).exp() / (PI * y * r) >= budget {
        r += 0.25;
    }
    r
}

/// Adaptive quadrature of the defining integral to absolute error `tol`.
pub fn voigt_quadrature(p: VoigtPoint, tol: f64) -> Result<f64> {
    if !(tol >= 1e-15) {
        return Err(Error::Validation(format!("tolerance must be >= 1e-15, got {tol:e}")));
    }
    let (x, y) = (p.x, p.y);
    let r = gaussian_cutoff(y, tol / 10.0);
    let mut breaks = vec![-r];
    if x > -r && x < r {
        breaks.push(x);
    }
    breaks.push(r);
    let integral = integrate(
        |t| {
            let d = x - t;
            y / PI * (-t * t).exp() / (y * y + d * d)
        },
        &breaks,
        1.0,
        0.9 * tol,
        MAX_PANELS,
    )?;
    Ok(integral.value)
}

/// Voigt function from the inverse-transform approximant of `e^(-t^2)`,
/// integrated numerically against the Lorentzian kernel over the range where
/// `e^(-t^2) >= 1e-18`.
pub fn voigt_inverse_route(coeffs: &CoefficientSet, p: VoigtPoint, tol: f64) -> Result<f64> {
    if coeffs.direction() != Direction::Inverse {
        return Err(Error::Direction {
            operation: "voigt inverse route",
            expected: Direction::Inverse.name(),
            found: coeffs.direction().name(),
        });
    }
    let (x, y) = (p.x, p.y);
    let r = (1e18f64).ln().sqrt();
    let mut breaks = vec![-r];
    if x > -r && x < r {
        breaks.push(x);
    }
    breaks.push(r);
    let fastest = coeffs.params().shift.abs()
        + coeffs.gamma().iter().copied().fold(0.0, f64::max) / (2.0 * PI);
    let max_width = 1.0 / (8.0 * fastest.max(1.0));
    let integral = integrate(
        |t| {
            let approx = eval_inverse(coeffs, t).map(|v| v.re).unwrap_or(f64::NAN);
            let d = x - t;
            approx * y / (PI * (y * y + d * d))
        },
        &breaks,
        max_width,
        tol,
        MAX_PANELS,
    )?;
    if !integral.value.is_finite() {
        return Err(Error::Validation("inverse approximant hit a pole".into()));
    }
    Ok(integral.value)
}

/// One row of a Voigt comparison curve.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VoigtSample {
    pub x: f64,
    pub approx: f64,
    pub reference: f64,
    pub abs_diff: f64,
}

/// Residue values next to the quadrature reference at `y` for every `x`.
pub fn voigt_curve(coeffs: &CoefficientSet, y: f64, xs: &[f64]) -> Result<Vec<VoigtSample>> {
    xs.par_iter()
        .map(|&x| {
            let p = VoigtPoint::new(x, y)?;
            let approx = voigt_residue(coeffs, p)?.value;
            let reference = voigt_quadrature(p, REFERENCE_TOL)?;
            Ok(VoigtSample {
                x,
                approx,
                reference,
                abs_diff: (approx - reference).abs(),
            })
        })
        .collect()
}
