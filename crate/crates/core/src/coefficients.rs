//! Expansion coefficients of the damped cosine series.
//!
//! For samples `v_n = f(nh - a) e^(sigma n h)`, `n = 0..=N`:
//!
//! ```text
//! gamma_m = pi (2m - 1) / (2^M h)
//! alpha_m = 2^(1-M) sum_n v_n cos(gamma_m n h)
//! beta_m  = 2^(1-M) sum_n v_n gamma_m sin(gamma_m n h)
//! ```
//!
//! The same arithmetic gives the inverse-transform coefficients when the
//! samples come from a spectrum `F(nh - a)`; only the direction tag differs.

use crate::error::{Error, Result};
use crate::summation::ComplexCompensatedSum;
use crate::targets::{ApproxParams, SampleSet, TargetKind};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

/// Which evaluator a coefficient set is meant for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Inverse,
}

impl Direction {
    pub fn name(self) -> &'static str {
        match self {
            Direction::Forward => "forward",
            Direction::Inverse => "inverse",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "forward" => Ok(Direction::Forward),
            "inverse" => Ok(Direction::Inverse),
            _ => Err(Error::Validation(format!(
                "direction must be 'forward' or 'inverse', got '{s}'"
            ))),
        }
    }
}

/// `gamma_m = pi (2m - 1) / (2^M h)` for `1 <= m <= 2^(M-1)`.
pub fn gamma_of(m: usize, params: &ApproxParams) -> Result<f64> {
    let max = params.term_count();
    if m == 0 || m > max {
        return Err(Error::Range { index: m, max });
    }
    let scale = 2f64.powi(params.order as i32);
    Ok(PI * (2 * m - 1) as f64 / (scale * params.step))
}

#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSet {
    pub(crate) params: ApproxParams,
    pub(crate) direction: Direction,
    pub(crate) target: TargetKind,
    pub(crate) alpha: Vec<Complex64>,
    pub(crate) beta: Vec<Complex64>,
    pub(crate) gamma: Vec<f64>,
}

impl CoefficientSet {
    /// Assembles a set from raw arrays, checking lengths and finiteness.
    /// `gamma` is always recomputed from `params`.
    pub fn from_parts(
        params: ApproxParams,
        direction: Direction,
        target: TargetKind,
        alpha: Vec<Complex64>,
        beta: Vec<Complex64>,
    ) -> Result<Self> {
        params.validate()?;
        let terms = params.term_count();
        if alpha.len() != terms || beta.len() != terms {
            return Err(Error::Validation(format!(
                "alpha/beta must have 2^(M-1) = {terms} entries, got {}/{}",
                alpha.len(),
                beta.len()
            )));
        }
        if alpha.iter().chain(&beta).any(|c| !c.is_finite()) {
            return Err(Error::Validation("alpha/beta contain non-finite values".into()));
        }
        let gamma = (1..=terms)
            .map(|m| gamma_of(m, &params))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            params,
            direction,
            target,
            alpha,
            beta,
            gamma,
        })
    }

    pub fn params(&self) -> &ApproxParams {
        &self.params
    }

    pub fn direction(&self) -> Direction {
        self.direction
    }

    pub fn target(&self) -> TargetKind {
        self.target
    }

    pub fn alpha(&self) -> &[Complex64] {
        &self.alpha
    }

    pub fn beta(&self) -> &[Complex64] {
        &self.beta
    }

    pub fn gamma(&self) -> &[f64] {
        &self.gamma
    }

    pub fn len(&self) -> usize {
        self.gamma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gamma.is_empty()
    }

    /// Iterates `(alpha_m, beta_m, gamma_m)` in ascending `m`.
    pub fn terms(&self) -> impl Iterator<Item = (Complex64, Complex64, f64)> + '_ {
        self.alpha
            .iter()
            .zip(&self.beta)
            .zip(&self.gamma)
            .map(|((&a, &b), &g)| (a, b, g))
    }
}

/// Computes `alpha`, `beta` and `gamma` from a sample set.
pub fn compute_coefficients(samples: &SampleSet, direction: Direction) -> Result<CoefficientSet> {
    let params = *samples.params();
    params.validate()?;
    let terms = params.term_count();
    let h = params.step;
    let norm = terms as f64;
    let mut alpha = Vec::with_capacity(terms);
    let mut beta = Vec::with_capacity(terms);
    for m in 1..=terms {
        let gamma = gamma_of(m, &params)?;
        let mut cos_acc = ComplexCompensatedSum::new();
        let mut sin_acc = ComplexCompensatedSum::new();
        for (n, &v) in samples.values().iter().enumerate() {
            let phase = gamma * n as f64 * h;
            cos_acc.add(v * phase.cos());
            sin_acc.add(v * (gamma * phase.sin()));
        }
        alpha.push(cos_acc.total() / norm);
        beta.push(sin_acc.total() / norm);
    }
    CoefficientSet::from_parts(params, direction, samples.target(), alpha, beta)
}
