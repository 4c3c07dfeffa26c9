//! Sampled target functions: the smooth rectangular surrogate and the
//! Gaussian family, plus the damped sampling grid they feed.

use crate::error::{Error, Result};
use crate::trig_identity::MAX_ORDER;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Largest sample index `N` accepted.
pub const MAX_SAMPLE_INDEX: usize = 10_000;
/// Largest surrogate half-power `k` accepted.
pub const MAX_SURROGATE_POWER: u32 = 1 << 20;

/// Tunable parameters of one approximation run.
///
/// `shift` is `a`, `order` is `M`, `max_index` is `N`, `step` is `h`,
/// `surrogate_power` is `k` (the rect surrogate uses exponent `2k`) and
/// `margin` is `Δ`, the padding in `a = 1/2 + Δ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxParams {
    pub shift: f64,
    pub order: u32,
    pub max_index: usize,
    pub step: f64,
    pub sigma: f64,
    pub surrogate_power: u32,
    pub margin: f64,
}

impl Default for ApproxParams {
    /// The sinc experiment: a = 0.6, k = 35, σ = 2.7, M = 6, h = 0.04, N = 28.
    fn default() -> Self {
        Self {
            shift: 0.6,
            order: 6,
            max_index: 28,
            step: 0.04,
            sigma: 2.7,
            surrogate_power: 35,
            margin: 0.1,
        }
    }
}

impl ApproxParams {
    /// Checks every hard invariant. Soft violations come back as warnings.
    pub fn validate(&self) -> Result<Vec<String>> {
        let fail = |msg: String| Err(Error::Validation(msg));
        if !self.shift.is_finite() {
            return fail(format!("a must be finite, got {}", self.shift));
        }
        if !(1..=MAX_ORDER).contains(&self.order) {
            return fail(format!("M must satisfy 1 <= M <= {MAX_ORDER}, got {}", self.order));
        }
        if self.max_index > MAX_SAMPLE_INDEX {
            return fail(format!("N must satisfy N <= {MAX_SAMPLE_INDEX}, got {}", self.max_index));
        }
        if !(self.step > 0.0 && self.step.is_finite()) {
            return fail(format!("h must be finite and > 0, got {}", self.step));
        }
        if !(self.sigma >= 0.0 && self.sigma.is_finite()) {
            return fail(format!("sigma must be finite and >= 0, got {}", self.sigma));
        }
        if !(1..=MAX_SURROGATE_POWER).contains(&self.surrogate_power) {
            return fail(format!(
                "k must satisfy 1 <= k <= {MAX_SURROGATE_POWER}, got {}",
                self.surrogate_power
            ));
        }
        if !(self.margin > 0.0 && self.margin.is_finite()) {
            return fail(format!("delta must be finite and > 0, got {}", self.margin));
        }
        let period = self.period();
        if !(period.is_finite() && period > 0.0) {
            return fail(format!("T = 2^(M+1) h must be finite, got {period}"));
        }
        let mut warnings = Vec::new();
        let span = self.max_index as f64 * self.step;
        if span < 2.0 * self.shift {
            warnings.push(format!(
                "N*h = {span} does not cover the support [0, 2a] = [0, {}]",
                2.0 * self.shift
            ));
        }
        Ok(warnings)
    }

    /// `T = 2^(M+1) h`.
    pub fn period(&self) -> f64 {
        2f64.powi(self.order as i32 + 1) * self.step
    }

    /// `2^(M-1)`.
    pub fn term_count(&self) -> usize {
        1usize << self.order.saturating_sub(1)
    }
}

/// The functions that can be sampled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TargetKind {
    /// `1 / ((2t)^(2k) + 1)`
    RectSurrogate,
    /// `exp(-(2t)^(2k))`
    RectSurrogateGauss,
    /// `pi^(3/2) i t exp(-pi^2 t^2)`, whose transform is `nu exp(-nu^2)`
    GaussDerivative,
    /// `sqrt(pi) exp(-pi^2 t^2)`, whose transform is `exp(-nu^2)`
    Gauss,
}

impl TargetKind {
    pub const ALL: [TargetKind; 4] = [
        TargetKind::RectSurrogate,
        TargetKind::RectSurrogateGauss,
        TargetKind::GaussDerivative,
        TargetKind::Gauss,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TargetKind::RectSurrogate => "rect-surrogate",
            TargetKind::RectSurrogateGauss => "rect-surrogate-gauss",
            TargetKind::GaussDerivative => "gauss-derivative",
            TargetKind::Gauss => "gauss",
        }
    }

    /// Evaluates the target at `t`; `k` only matters for the surrogates.
    pub fn eval(self, t: f64, k: u32) -> Complex64 {
        match self {
            TargetKind::RectSurrogate => Complex64::new(rect_surrogate(t, k), 0.0),
            TargetKind::RectSurrogateGauss => {
                let p = (2.0 * t).powi(2 * k as i32);
                Complex64::new((-p).exp(), 0.0)
            }
            TargetKind::GaussDerivative => {
                let g = PI.powf(1.5) * t * (-(PI * t).powi(2)).exp();
                Complex64::new(0.0, g)
            }
            TargetKind::Gauss => Complex64::new(PI.sqrt() * (-(PI * t).powi(2)).exp(), 0.0),
        }
    }

    /// The reference whose transform this target approximates.
    pub fn default_reference(self) -> ReferenceKind {
        match self {
            TargetKind::RectSurrogate | TargetKind::RectSurrogateGauss => ReferenceKind::Sinc,
            TargetKind::GaussDerivative => ReferenceKind::NuGauss,
            TargetKind::Gauss => ReferenceKind::Gauss,
        }
    }
}

impl fmt::Display for TargetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TargetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown target '{s}'")))
    }
}

/// `1 / ((2t)^(2k) + 1)`, evaluated in log space once `|2t| > 1` so that the
/// power never overflows.
pub fn rect_surrogate(t: f64, k: u32) -> f64 {
    let x = (2.0 * t).abs();
    if x <= 1.0 {
        1.0 / (x.powi(2 * k as i32) + 1.0)
    } else {
        let u = 2.0 * k as f64 * x.ln();
        let e = (-u).exp();
        e / (1.0 + e)
    }
}

/// Damped samples `v_n = f(nh - a) e^(sigma n h)` for `n = 0..=N`.
#[derive(Debug, Clone, PartialEq)]
pub struct SampleSet {
    params: ApproxParams,
    target: TargetKind,
    values: Vec<Complex64>,
}

impl SampleSet {
    /// Wraps externally produced sample values. The length must be `N + 1`
    /// and every value finite.
    pub fn from_values(
        params: ApproxParams,
        target: TargetKind,
        values: Vec<Complex64>,
    ) -> Result<Self> {
        params.validate()?;
        if values.len() != params.max_index + 1 {
            return Err(Error::Validation(format!(
                "sample count {} does not match N + 1 = {}",
                values.len(),
                params.max_index + 1
            )));
        }
        if let Some(n) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Validation(format!("sample {n} is not finite")));
        }
        Ok(Self {
            params,
            target,
            values,
        })
    }

    pub fn params(&self) -> &ApproxParams {
        &self.params
    }

    pub fn target(&self) -> TargetKind {
        self.target
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Samples `target(nh - a) e^(sigma n h)` on `n = 0..=N`.
pub fn sample_grid(target: TargetKind, params: &ApproxParams) -> Result<SampleSet> {
    params.validate()?;
    let h = params.step;
    let exponent = params.sigma * params.max_index as f64 * h;
    if !exponent.exp().is_finite() {
        return Err(Error::Overflow { exponent });
    }
    let values = (0..=params.max_index)
        .map(|n| {
            let n = n as f64;
            let weight = (params.sigma * n * h).exp();
            target.eval(n * h - params.shift, params.surrogate_power) * weight
        })
        .collect();
    SampleSet::from_values(*params, target, values)
}

/// Closed-form functions the approximants are compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReferenceKind {
    /// `sin(pi x) / (pi x)`, 1 at the origin
    Sinc,
    /// `x exp(-x^2)`
    NuGauss,
    /// `exp(-x^2)`
    Gauss,
    /// 1 inside `|x| < 1/2`, 1/2 on the edge, 0 outside
    Rect,
}

impl ReferenceKind {
    pub const ALL: [ReferenceKind; 4] = [
        ReferenceKind::Sinc,
        ReferenceKind::NuGauss,
        ReferenceKind::Gauss,
        ReferenceKind::Rect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ReferenceKind::Sinc => "sinc",
            ReferenceKind::NuGauss => "nu-gauss",
            ReferenceKind::Gauss => "gauss",
            ReferenceKind::Rect => "rect",
        }
    }
}

impl FromStr for ReferenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Validation(format!("unknown reference '{s}'")))
    }
}

pub fn reference_value(kind: ReferenceKind, x: f64) -> f64 {
    match kind {
        ReferenceKind::Sinc => {
            if x == 0.0 {
                1.0
            } else {
                (PI * x).sin() / (PI * x)
            }
        }
        ReferenceKind::NuGauss => x * (-x * x).exp(),
        ReferenceKind::Gauss => (-x * x).exp(),
        ReferenceKind::Rect => {
            let ax = x.abs();
            if ax < 0.5 {
                1.0
            } else if ax == 0.5 {
                0.5
            } else {
                0.0
            }
        }
    }
}
