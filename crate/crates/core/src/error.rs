use thiserror::Error;

/// Errors raised by the approximation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    /// A parameter violates one of its invariants. The message names it.
    #[error("invalid parameter: {0}")]
    Validation(String),

    #[error("index {index} outside 1..={max}")]
    Range { index: usize, max: usize },

    #[error("damping weight e^(sigma*N*h) overflows binary64 (sigma*N*h = {exponent})")]
    Overflow { exponent: f64 },

    #[error("coefficient set is {found} but the {operation} evaluator needs {expected}")]
    Direction {
        operation: &'static str,
        expected: &'static str,
        found: &'static str,
    },

    #[error("pole hit: |gamma_m^2 + s^2| = {magnitude:e} for m = {term}")]
    Pole { term: usize, magnitude: f64 },

    #[error("degenerate denominator {which} in the residue sum for m = {term}")]
    Denominator { term: usize, which: usize },

    #[error("quadrature did not reach tolerance {tol:e} within {panels} panels (estimate {estimate:e})")]
    Convergence {
        tol: f64,
        panels: usize,
        estimate: f64,
    },

    #[error("infinite upper limit needs sigma > 0")]
    Damping,

    #[error("frequency |nu| = {0} exceeds the oracle limit of 100")]
    Frequency(f64),

    #[error("malformed file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
