//! Globally adaptive 15-point Gauss-Kronrod integration.
//!
//! Panels are kept in a max-heap keyed by their error estimate
//! `|K15 - G7|`; the worst panel is bisected until the summed estimate drops
//! below the requested absolute tolerance or the panel budget runs out.

use crate::error::{Error, Result};
use crate::summation::CompensatedSum;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];

#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the odd Kronrod nodes XGK[1], XGK[3], XGK[5], XGK[7].
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Panel {
    fn eq(&self, other: &Self) -> bool {
        self.error.total_cmp(&other.error) == Ordering::Equal
    }
}

impl Eq for Panel {}

impl PartialOrd for Panel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Panel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn kronrod<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Panel {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = WGK[7] * fc;
    let mut gauss = WG[3] * fc;
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Panel {
        lo,
        hi,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Outcome of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error_estimate: f64,
    pub panels: usize,
}

/// Integrates `f` over `[breaks[0], breaks[last]]`.
///
/// `breaks` must be strictly increasing; every interval between consecutive
/// breaks starts as its own panel (so singular-looking features should sit on
/// a break). Initial panels are further split until none is wider than
/// `max_width`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    breaks: &[f64],
    max_width: f64,
    tol: f64,
    max_panels: usize,
) -> Result<Integral> {
    if breaks.len() < 2 || breaks.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::Validation(
            "quadrature breakpoints must be strictly increasing".into(),
        ));
    }
    if !(tol > 0.0) {
        return Err(Error::Validation(format!("tolerance must be > 0, got {tol}")));
    }
    if !(max_width > 0.0) {
        return Err(Error::Validation(format!("panel width must be > 0, got {max_width}")));
    }

    let mut heap = BinaryHeap::new();
    for w in breaks.windows(2) {
        let pieces = ((w[1] - w[0]) / max_width).ceil().max(1.0) as usize;
        if heap.len() + pieces > max_panels {
            return Err(Error::Convergence {
                tol,
                panels: max_panels,
                estimate: f64::INFINITY,
            });
        }
        let width = (w[1] - w[0]) / pieces as f64;
        for i in 0..pieces {
            let lo = w[0] + i as f64 * width;
            let hi = if i + 1 == pieces { w[1] } else { lo + width };
            heap.push(kronrod(&f, lo, hi));
        }
    }

    let mut total_error: f64 = heap.iter().map(|p| p.error).sum();
    loop {
        if total_error <= tol {
            // The running total drifts; confirm with a fresh sum before stopping.
            total_error = heap.iter().map(|p| p.error).sum();
            if total_error <= tol {
                break;
            }
        }
        if heap.len() >= max_panels {
            return Err(Error::Convergence {
                tol,
                panels: heap.len(),
                estimate: total_error,
            });
        }
        let worst = heap.pop().expect("heap holds at least one panel");
        let mid = 0.5 * (worst.lo + worst.hi);
        if !(worst.lo < mid && mid < worst.hi) {
            return Err(Error::Convergence {
                tol,
                panels: heap.len() + 1,
                estimate: total_error,
            });
        }
        let left = kronrod(&f, worst.lo, mid);
        let right = kronrod(&f, mid, worst.hi);
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    let value = heap.iter().map(|p| p.value).sum::<CompensatedSum>().total();
    Ok(Integral {
        value,
        error_estimate: total_error,
        panels: heap.len(),
    })
}
