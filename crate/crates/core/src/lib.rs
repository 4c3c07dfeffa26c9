//! Rational approximations of Fourier transforms.
//!
//! A function `f(t - a)` damped by `e^(sigma t)` is sampled on `t = n h`,
//! expanded in the truncated cosine series of the sinc kernel, and integrated
//! in closed form. The result is a sum of `2^(M-1)` terms
//! `(alpha_m s + beta_m) / (gamma_m^2 + s^2)` in `s = sigma + 2 pi i nu`:
//! a rational function of `nu`. The same coefficients, taken for a Gaussian,
//! give the Voigt function by residues.
//!
//! Module map:
//!
//! * [`trig_identity`]: cosine product and its product-to-sum expansion
//! * [`targets`]: sampled functions, parameters and reference values
//! * [`coefficients`]: `alpha`, `beta`, `gamma`
//! * [`rational_eval`]: forward and inverse approximants, error scans
//! * [`voigt`]: residue and quadrature evaluation of `K(x, y)`
//! * [`oracle`]: independent quadrature of the defining integrals
//! * [`cli`]: the `sinc-rational` command

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod coefficients;
pub mod error;
pub mod io;
pub mod oracle;
pub mod quadrature;
pub mod rational_eval;
pub mod summation;
pub mod targets;
pub mod trig_identity;
pub mod voigt;

pub use coefficients::{compute_coefficients, gamma_of, CoefficientSet, Direction};
pub use error::{Error, Result};
pub use rational_eval::{error_scan, eval_forward, eval_inverse, EvaluationCurve};
pub use targets::{
    rect_surrogate, reference_value, sample_grid, ApproxParams, ReferenceKind, SampleSet, TargetKind,
};
pub use trig_identity::{cosine_sum, sinc_series, viete_product, IdentityOrder};
pub use voigt::{voigt_quadrature, voigt_residue, VoigtPoint, VoigtValue};
