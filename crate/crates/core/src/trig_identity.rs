//! Truncated Viète product, the cosine product-to-sum identity, and the
//! cosine-series form of the sinc kernel built from it.

use crate::error::{Error, Result};
use crate::summation::CompensatedSum;
use crate::targets::ApproxParams;
use std::f64::consts::PI;

/// Largest truncation order accepted anywhere in the crate.
pub const MAX_ORDER: u32 = 24;

/// Truncation order `M`: the number of cosine factors in the product,
/// equivalently `2^(M-1)` terms in the sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IdentityOrder(u32);

impl IdentityOrder {
    pub fn new(order: u32) -> Result<Self> {
        if !(1..=MAX_ORDER).contains(&order) {
            return Err(Error::Validation(format!(
                "M must satisfy 1 <= M <= {MAX_ORDER}, got {order}"
            )));
        }
        Ok(Self(order))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// `2^(M-1)`.
    pub fn term_count(self) -> usize {
        1usize << (self.0 - 1)
    }

    /// `2^M` as a float; exact for every admissible order.
    pub fn scale(self) -> f64 {
        (1u64 << self.0) as f64
    }
}

/// `prod_{m=1}^{M} cos(t / 2^m)`.
pub fn viete_product(t: f64, order: IdentityOrder) -> f64 {
    (1..=order.get())
        .map(|m| (t / (1u64 << m) as f64).cos())
        .product()
}

/// `2^(1-M) sum_{m=1}^{2^(M-1)} cos((2m-1) t / 2^M)`.
///
/// Each cosine is evaluated directly from its own argument and accumulated
/// with compensation in ascending `m`.
pub fn cosine_sum(t: f64, order: IdentityOrder) -> f64 {
    let scale = order.scale();
    let terms = order.term_count();
    let mut acc = CompensatedSum::new();
    for m in 1..=terms {
        let odd = (2 * m - 1) as f64;
        acc.add((odd * t / scale).cos());
    }
    acc.total() / terms as f64
}

/// Cosine-series surrogate of `sinc(pi t / h)` with `M` and `h` taken from
/// `params`. Accurate only for `|t| <= T/4`, `T = 2^(M+1) h`; outside that
/// window it repeats with period `T`.
pub fn sinc_series(t: f64, params: &ApproxParams) -> Result<f64> {
    let order = IdentityOrder::new(params.order)?;
    if !(params.step > 0.0) {
        return Err(Error::Validation(format!("h must be > 0, got {}", params.step)));
    }
    Ok(cosine_sum(PI * t / params.step, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn order(m: u32) -> IdentityOrder {
        IdentityOrder::new(m).unwrap()
    }

    fn sinc_params() -> ApproxParams {
        ApproxParams {
            order: 6,
            step: 0.04,
            ..ApproxParams::default()
        }
    }

    #[test]
    fn order_bounds() {
        assert!(IdentityOrder::new(0).is_err());
        assert!(IdentityOrder::new(25).is_err());
        assert_eq!(order(24).term_count(), 1 << 23);
        assert_eq!(order(1).term_count(), 1);
    }

    #[test]
    fn product_at_zero_is_one() {
        assert_eq!(viete_product(0.0, order(5)), 1.0);
    }

    #[test]
    fn single_factor_at_pi_vanishes() {
        assert!(viete_product(PI, order(1)).abs() < 1e-16);
    }

    #[test]
    fn product_matches_sum_at_order_eight() {
        let lhs = viete_product(1.7, order(8));
        let rhs = cosine_sum(1.7, order(8));
        assert!((lhs - rhs).abs() <= 1e-13, "{lhs} vs {rhs}");
    }

    #[test]
    fn sum_at_zero_is_one() {
        assert_eq!(cosine_sum(0.0, order(6)), 1.0);
    }

    #[test]
    fn single_term_sum_is_half_angle_cosine() {
        for t in [-3.0, 0.25, 1.0, 42.0] {
            assert_eq!(cosine_sum(t, order(1)), (t / 2.0).cos());
        }
    }

    #[test]
    fn two_term_sum() {
        let t: f64 = 2.5;
        let expected = 0.5 * ((t / 4.0).cos() + (3.0 * t / 4.0).cos());
        assert!((cosine_sum(t, order(2)) - expected).abs() <= 1e-16);
    }

    #[test]
    fn series_is_one_at_origin() {
        assert_eq!(sinc_series(0.0, &sinc_params()).unwrap(), 1.0);
    }

    #[test]
    fn series_vanishes_at_first_zero_of_sinc() {
        // cos(pi/2) is the first factor of the product, so the identity is exact here.
        let v = sinc_series(0.04, &sinc_params()).unwrap();
        assert!(v.abs() < 1e-14, "{v}");
    }

    #[test]
    fn series_replica_at_half_period() {
        let p = sinc_params();
        let period = p.period();
        let a = sinc_series(period / 2.0, &p).unwrap();
        let b = sinc_series(period / 2.0 - period, &p).unwrap();
        assert!((a - b).abs() <= 1e-13);
    }

    #[test]
    fn series_tracks_sinc_inside_window() {
        // |t| <= T/4 = 1.28; the truncated kernel stays within a few 1e-3 of sinc.
        let p = sinc_params();
        let mut worst: f64 = 0.0;
        for i in 0..=200 {
            let t = -0.3 + 0.6 * i as f64 / 200.0;
            let x = PI * t / p.step;
            let exact = if x == 0.0 { 1.0 } else { x.sin() / x };
            worst = worst.max((sinc_series(t, &p).unwrap() - exact).abs());
        }
        assert!(worst < 0.02, "{worst}");
    }

    #[test]
    fn series_rejects_bad_step() {
        let p = ApproxParams {
            step: 0.0,
            ..sinc_params()
        };
        assert!(sinc_series(0.1, &p).is_err());
    }

    proptest! {
        #[test]
        fn identity_holds(m in 1u32..=12, t in -100.0f64..100.0) {
            let d = (viete_product(t, order(m)) - cosine_sum(t, order(m))).abs();
            prop_assert!(d <= 1e-11, "M={} t={} d={}", m, t, d);
        }

        #[test]
        fn sum_is_even(m in 1u32..=12, t in -100.0f64..100.0) {
            prop_assert!((cosine_sum(-t, order(m)) - cosine_sum(t, order(m))).abs() <= 1e-15);
        }

        #[test]
        fn sum_is_bounded(m in 1u32..=14, t in -1e3f64..1e3) {
            prop_assert!(cosine_sum(t, order(m)).abs() <= 1.0 + 1e-12);
        }

        #[test]
        fn series_is_periodic(t in -2.0f64..2.0) {
            let p = sinc_params();
            let a = sinc_series(t + p.period(), &p).unwrap();
            let b = sinc_series(t, &p).unwrap();
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }
}
