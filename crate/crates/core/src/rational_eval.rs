//! Evaluation of the rational approximants and error scans against
//! closed-form references.

use crate::coefficients::{CoefficientSet, Direction};
use crate::error::{Error, Result};
use crate::summation::ComplexCompensatedSum;
use crate::targets::{reference_value, ReferenceKind};
use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

/// Denominators smaller than this are treated as poles.
pub const POLE_THRESHOLD: f64 = 1e-300;

fn require(coeffs: &CoefficientSet, expected: Direction, operation: &'static str) -> Result<()> {
    if coeffs.direction() != expected {
        return Err(Error::Direction {
            operation,
            expected: expected.name(),
            found: coeffs.direction().name(),
        });
    }
    Ok(())
}

/// `sum_m (alpha_m s + beta_m) / (gamma_m^2 + s^2)` for complex `s`.
pub fn partial_fraction_sum(coeffs: &CoefficientSet, s: Complex64) -> Result<Complex64> {
    let s2 = s * s;
    let mut acc = ComplexCompensatedSum::new();
    for (m, (alpha, beta, gamma)) in coeffs.terms().enumerate() {
        let den = gamma * gamma + s2;
        if den.norm() < POLE_THRESHOLD {
            return Err(Error::Pole {
                term: m + 1,
                magnitude: den.norm(),
            });
        }
        acc.add((alpha * s + beta) / den);
    }
    Ok(acc.total())
}

/// Approximates `F(nu)`, the forward transform of the sampled function:
/// `e^(2 pi i nu a) sum_m (alpha_m s + beta_m) / (gamma_m^2 + s^2)` with
/// `s = sigma + 2 pi i nu`.
pub fn eval_forward(coeffs: &CoefficientSet, nu: f64) -> Result<Complex64> {
    require(coeffs, Direction::Forward, "forward")?;
    let p = coeffs.params();
    let s = Complex64::new(p.sigma, 2.0 * PI * nu);
    let shift = Complex64::new(0.0, 2.0 * PI * nu * p.shift).exp();
    Ok(shift * partial_fraction_sum(coeffs, s)?)
}

/// Approximates `f(t)`, the inverse transform of the sampled spectrum:
/// `e^(-2 pi i t a) sum_m (alpha*_m s + beta*_m) / (gamma_m^2 + s^2)` with
/// `s = sigma - 2 pi i t`.
pub fn eval_inverse(coeffs: &CoefficientSet, t: f64) -> Result<Complex64> {
    require(coeffs, Direction::Inverse, "inverse")?;
    let p = coeffs.params();
    let s = Complex64::new(p.sigma, -2.0 * PI * t);
    let shift = Complex64::new(0.0, -2.0 * PI * t * p.shift).exp();
    Ok(shift * partial_fraction_sum(coeffs, s)?)
}

/// Dispatches on the coefficient set's direction.
pub fn eval(coeffs: &CoefficientSet, x: f64) -> Result<Complex64> {
    match coeffs.direction() {
        Direction::Forward => eval_forward(coeffs, x),
        Direction::Inverse => eval_inverse(coeffs, x),
    }
}

/// `count` evenly spaced points from `lo` to `hi`, both included. The last
/// point is `hi` exactly.
pub fn linspace(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![lo],
        _ => {
            let step = (hi - lo) / (count - 1) as f64;
            (0..count)
                .map(|i| if i + 1 == count { hi } else { lo + i as f64 * step })
                .collect()
        }
    }
}

/// Approximant values on a grid next to a reference.
#[derive(Debug, Clone, PartialEq)]
pub struct EvaluationCurve {
    pub abscissae: Vec<f64>,
    pub approx: Vec<Complex64>,
    pub reference: Vec<f64>,
    /// `|reference - Re(approx)|`
    pub abs_diff: Vec<f64>,
}

impl EvaluationCurve {
    pub fn len(&self) -> usize {
        self.abscissae.len()
    }

    pub fn is_empty(&self) -> bool {
        self.abscissae.is_empty()
    }

    pub fn max_abs_diff(&self) -> f64 {
        self.abs_diff.iter().copied().fold(0.0, f64::max)
    }

    pub fn max_abs_imag(&self) -> f64 {
        self.approx.iter().map(|v| v.im.abs()).fold(0.0, f64::max)
    }
}

/// Evaluates the approximant on `count` points over `[lo, hi]` and compares
/// its real part with `reference`.
pub fn error_scan(
    coeffs: &CoefficientSet,
    reference: ReferenceKind,
    lo: f64,
    hi: f64,
    count: usize,
) -> Result<EvaluationCurve> {
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::Validation(format!("scan range needs lo < hi, got [{lo}, {hi}]")));
    }
    if count < 2 {
        return Err(Error::Validation(format!("scan count must be >= 2, got {count}")));
    }
    let abscissae = linspace(lo, hi, count);
    let approx = abscissae
        .par_iter()
        .map(|&x| eval(coeffs, x))
        .collect::<Result<Vec<_>>>()?;
    let reference: Vec<f64> = abscissae.iter().map(|&x| reference_value(reference, x)).collect();
    let abs_diff = reference
        .iter()
        .zip(&approx)
        .map(|(r, a)| (r - a.re).abs())
        .collect();
    Ok(EvaluationCurve {
        abscissae,
        approx,
        reference,
        abs_diff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coefficients::compute_coefficients;
    use crate::targets::{sample_grid, ApproxParams, TargetKind};

    fn sinc_coeffs() -> CoefficientSet {
        let s = sample_grid(TargetKind::RectSurrogate, &ApproxParams::default()).unwrap();
        compute_coefficients(&s, Direction::Forward).unwrap()
    }

    fn gauss_params() -> ApproxParams {
        ApproxParams {
            shift: 2.0,
            order: 6,
            max_index: 55,
            step: 0.078,
            sigma: 5.0,
            ..ApproxParams::default()
        }
    }

    fn gauss_coeffs(direction: Direction) -> CoefficientSet {
        let s = sample_grid(TargetKind::Gauss, &gauss_params()).unwrap();
        compute_coefficients(&s, direction).unwrap()
    }

    fn zero_coeffs(direction: Direction) -> CoefficientSet {
        let p = ApproxParams::default();
        let z = vec![Complex64::default(); p.term_count()];
        CoefficientSet::from_parts(p, direction, TargetKind::RectSurrogate, z.clone(), z).unwrap()
    }

    #[test]
    fn sinc_at_origin_and_first_zero() {
        let c = sinc_coeffs();
        assert!((eval_forward(&c, 0.0).unwrap().re - 1.0).abs() < 3.2e-3);
        assert!(eval_forward(&c, 1.0).unwrap().re.abs() < 3.2e-3);
    }

    #[test]
    fn zero_coefficients_vanish() {
        let f = zero_coeffs(Direction::Forward);
        let i = zero_coeffs(Direction::Inverse);
        for x in [-3.0, 0.0, 0.7, 5.0] {
            assert_eq!(eval_forward(&f, x).unwrap(), Complex64::default());
            assert_eq!(eval_inverse(&i, x).unwrap(), Complex64::default());
        }
    }

    #[test]
    fn direction_is_enforced() {
        let c = sinc_coeffs();
        assert!(matches!(eval_inverse(&c, 0.0), Err(Error::Direction { .. })));
        let g = gauss_coeffs(Direction::Inverse);
        assert!(matches!(eval_forward(&g, 0.0), Err(Error::Direction { .. })));
    }

    #[test]
    fn pole_is_reported() {
        let c = sinc_coeffs();
        // s = i gamma_1 puts the first denominator at zero.
        let s = Complex64::new(0.0, c.gamma()[0]);
        assert!(matches!(
            partial_fraction_sum(&c, s),
            Err(Error::Pole { term: 1, .. })
        ));
    }

    #[test]
    fn inverse_gauss_at_origin() {
        let c = gauss_coeffs(Direction::Inverse);
        assert!((eval_inverse(&c, 0.0).unwrap().re - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn inverse_gauss_is_nearly_even() {
        let c = gauss_coeffs(Direction::Inverse);
        for t in [0.3, 1.1, 2.5, 4.0] {
            let a = eval_inverse(&c, t).unwrap().re;
            let b = eval_inverse(&c, -t).unwrap().re;
            assert!((a - b).abs() <= 2e-9, "t={t}");
        }
    }

    #[test]
    fn linspace_endpoints() {
        let g = linspace(-2.0 * PI, 2.0 * PI, 1000);
        assert_eq!(g.len(), 1000);
        assert_eq!(g[0], -2.0 * PI);
        assert_eq!(g[999], 2.0 * PI);
        assert_eq!(linspace(1.0, 3.0, 2), vec![1.0, 3.0]);
    }

    #[test]
    fn scan_with_two_points() {
        let c = sinc_coeffs();
        let curve = error_scan(&c, ReferenceKind::Sinc, -1.0, 2.0, 2).unwrap();
        assert_eq!(curve.abscissae, vec![-1.0, 2.0]);
    }

    #[test]
    fn scan_validation() {
        let c = sinc_coeffs();
        assert!(error_scan(&c, ReferenceKind::Sinc, 0.0, 1.0, 1).is_err());
        assert!(error_scan(&c, ReferenceKind::Sinc, 1.0, 1.0, 10).is_err());
    }

    #[test]
    fn sinc_scan_error_and_imaginary_part() {
        let c = sinc_coeffs();
        let curve = error_scan(&c, ReferenceKind::Sinc, -2.0 * PI, 2.0 * PI, 1000).unwrap();
        assert!(curve.max_abs_diff() < 3.2e-3);
        assert!(curve.max_abs_imag() <= 5.0 * 3.2e-3);
        for i in 0..curve.len() {
            let d = (curve.reference[i] - curve.approx[i].re).abs();
            assert_eq!(d, curve.abs_diff[i]);
        }
    }
}
