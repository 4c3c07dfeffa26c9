//! Brute-force reference transforms.
//!
//! Nothing here calls into the rational evaluators: the transforms are
//! computed by adaptive quadrature of the defining integrals, or by
//! integrating the damped cosine expansion term by term in exponential form.
//! Agreement with the approximants is therefore independent evidence.

use crate::coefficients::{CoefficientSet, Direction};
use crate::error::{Error, Result};
use crate::quadrature::integrate;
use crate::summation::ComplexCompensatedSum;
use crate::targets::{SampleSet, TargetKind};
use num_complex::Complex64;
use std::f64::consts::PI;

pub const MAX_FREQUENCY: f64 = 100.0;
pub const MIN_TOLERANCE: f64 = 1e-15;
pub const MAX_PANELS: usize = 10_000_000;
/// Infinite upper limits are cut where the damping envelope `e^(-sigma t)`
/// drops below this.
pub const ENVELOPE_CUTOFF: f64 = 1e-18;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub lo: f64,
    pub hi: f64,
    pub tol: f64,
    pub max_panels: usize,
}

impl QuadratureSpec {
    pub fn new(lo: f64, hi: f64, tol: f64) -> Self {
        Self {
            lo,
            hi,
            tol,
            max_panels: 1_000_000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.lo.is_finite() && self.hi.is_finite() && self.lo < self.hi) {
            return Err(Error::Validation(format!(
                "quadrature range needs lo < hi, got [{}, {}]",
                self.lo, self.hi
            )));
        }
        if !(self.tol >= MIN_TOLERANCE) {
            return Err(Error::Validation(format!(
                "quadrature tolerance must be >= {MIN_TOLERANCE:e}, got {:e}",
                self.tol
            )));
        }
        if self.max_panels == 0 || self.max_panels > MAX_PANELS {
            return Err(Error::Validation(format!(
                "max_panels must be in 1..={MAX_PANELS}, got {}",
                self.max_panels
            )));
        }
        Ok(())
    }
}

/// Upper limit of the damped-expansion integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum UpperLimit {
    Finite(f64),
    Infinite,
}

fn check_frequency(nu: f64) -> Result<()> {
    if !(nu.abs() <= MAX_FREQUENCY) {
        return Err(Error::Frequency(nu.abs()));
    }
    Ok(())
}

/// Integrates a complex integrand as two real quadratures, each to `tol / 2`.
fn integrate_complex<F: Fn(f64) -> Complex64>(
    f: F,
    breaks: &[f64],
    max_width: f64,
    tol: f64,
    max_panels: usize,
) -> Result<Complex64> {
    let re = integrate(|t| f(t).re, breaks, max_width, 0.5 * tol, max_panels)?;
    let im = integrate(|t| f(t).im, breaks, max_width, 0.5 * tol, max_panels)?;
    Ok(Complex64::new(re.value, im.value))
}

fn breaks_with(lo: f64, hi: f64, interior: &[f64]) -> Vec<f64> {
    let mut breaks = vec![lo];
    let mut inner: Vec<f64> = interior.iter().copied().filter(|&x| x > lo && x < hi).collect();
    inner.sort_by(f64::total_cmp);
    inner.dedup();
    breaks.extend(inner);
    breaks.push(hi);
    breaks
}

/// `int_lo^hi f(t - shift) e^(-2 pi i nu t) dt` by adaptive quadrature.
pub fn fourier_forward_quadrature(
    target: TargetKind,
    k: u32,
    shift: f64,
    nu: f64,
    spec: &QuadratureSpec,
) -> Result<Complex64> {
    spec.validate()?;
    check_frequency(nu)?;
    let max_width = if nu == 0.0 {
        spec.hi - spec.lo
    } else {
        1.0 / (8.0 * nu.abs())
    };
    let edges = match target {
        TargetKind::RectSurrogate | TargetKind::RectSurrogateGauss => {
            vec![shift - 0.5, shift, shift + 0.5]
        }
        TargetKind::Gauss | TargetKind::GaussDerivative => vec![shift],
    };
    let breaks = breaks_with(spec.lo, spec.hi, &edges);
    integrate_complex(
        |t| target.eval(t - shift, k) * Complex64::new(0.0, -2.0 * PI * nu * t).exp(),
        &breaks,
        max_width,
        spec.tol,
        spec.max_panels,
    )
}

/// Transform of the damped cosine expansion,
/// `int_0^upper e^(-sigma t) sum_m [alpha_m cos(gamma_m t) + beta_m / gamma_m sin(gamma_m t)] e^(-2 pi i nu t) dt`,
/// by adaptive quadrature. No shift factor is applied.
pub fn damped_expansion_quadrature(
    coeffs: &CoefficientSet,
    nu: f64,
    upper: UpperLimit,
    tol: f64,
    max_panels: usize,
) -> Result<Complex64> {
    if coeffs.direction() != Direction::Forward {
        return Err(Error::Direction {
            operation: "damped expansion",
            expected: Direction::Forward.name(),
            found: coeffs.direction().name(),
        });
    }
    check_frequency(nu)?;
    let sigma = coeffs.params().sigma;
    let hi = match upper {
        UpperLimit::Finite(u) => u,
        UpperLimit::Infinite => {
            if !(sigma > 0.0) {
                return Err(Error::Damping);
            }
            -ENVELOPE_CUTOFF.ln() / sigma
        }
    };
    let spec = QuadratureSpec {
        lo: 0.0,
        hi,
        tol,
        max_panels,
    };
    spec.validate()?;
    let fastest = coeffs.gamma().iter().copied().fold(0.0, f64::max) / (2.0 * PI) + nu.abs();
    let max_width = if fastest > 0.0 { 1.0 / (8.0 * fastest) } else { hi };
    let terms: Vec<(Complex64, Complex64, f64)> = coeffs.terms().collect();
    let bracket = |t: f64| {
        let mut acc = ComplexCompensatedSum::new();
        for &(alpha, beta, gamma) in &terms {
            let (s, c) = (gamma * t).sin_cos();
            acc.add(alpha * c + beta * (s / gamma));
        }
        acc.total() * (-sigma * t).exp()
    };
    integrate_complex(
        |t| bracket(t) * Complex64::new(0.0, -2.0 * PI * nu * t).exp(),
        &[0.0, hi],
        max_width,
        tol,
        max_panels,
    )
}

/// Closed-form transform over `[0, inf)` of the damped double sum, one
/// `(m, n)` pair at a time:
///
/// ```text
/// 2^(1-M) sum_m sum_n v_n / 2 [ e^(-i g c) / (s - i g) + e^(i g c) / (s + i g) ]
/// ```
///
/// with `g = gamma_m`, `c = n h` and `s = sigma + 2 pi i nu`. This is the
/// unshifted forward approximant reached without collapsing the sum over `n`.
pub fn expansion_transform_by_terms(samples: &SampleSet, nu: f64) -> Result<Complex64> {
    let p = samples.params();
    if !(p.sigma > 0.0) {
        return Err(Error::Damping);
    }
    let terms = p.term_count();
    let scale = 2f64.powi(p.order as i32) * p.step;
    let s = Complex64::new(p.sigma, 2.0 * PI * nu);
    let i = Complex64::i();
    let mut acc = ComplexCompensatedSum::new();
    for m in 1..=terms {
        let g = PI * (2 * m - 1) as f64 / scale;
        let down = 1.0 / (s - i * g);
        let up = 1.0 / (s + i * g);
        for (n, &v) in samples.values().iter().enumerate() {
            let c = n as f64 * p.step;
            let rot = (i * g * c).exp();
            acc.add(v * 0.5 * (rot.conj() * down + rot * up));
        }
    }
    Ok(acc.total() / terms as f64)
}
