//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line with the
//! measured value, the threshold and the wall time.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sinc_rational::cli::Preset;
use sinc_rational::oracle::{
    damped_expansion_quadrature, expansion_transform_by_terms, fourier_forward_quadrature,
    QuadratureSpec, UpperLimit,
};
use sinc_rational::voigt::voigt_curve;
use sinc_rational::{
    compute_coefficients, cosine_sum, error_scan, eval_forward, sample_grid, viete_product,
    voigt_residue, ApproxParams, Direction, IdentityOrder, ReferenceKind, TargetKind, VoigtPoint,
};
use std::f64::consts::PI;
use std::time::{Duration, Instant};

const TWO_PI: f64 = 2.0 * PI;
const GRID: usize = 1000;

// e * erfc(1)
const VOIGT_0_1: f64 = 0.427_583_576_155_807;

fn report(id: &str, name: &str, pass: bool, detail: String, elapsed: Duration) {
    println!(
        "[{}] criterion {id}: {name}: {detail} ({:.3} s)",
        if pass { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    );
}

fn seeded(seed: u64, lo: f64, hi: f64, count: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| rng.gen_range(lo..=hi)).collect()
}

#[test]
fn criterion_1_sinc_reproduction() {
    let start = Instant::now();
    let coeffs = Preset::Sinc.coefficients(Direction::Forward).unwrap();
    let curve = error_scan(&coeffs, ReferenceKind::Sinc, -TWO_PI, TWO_PI, GRID).unwrap();
    let worst = curve.max_abs_diff();
    let elapsed = start.elapsed();
    let pass = worst < 3.2e-3 && elapsed < Duration::from_secs(1);
    report("1", "sinc reproduction", pass, format!("max_abs_diff={worst:.4e} < 3.2e-3"), elapsed);
    assert!(worst < 3.2e-3);
    assert!(elapsed < Duration::from_secs(1));
}

#[test]
fn criterion_2_nu_gauss_reproduction() {
    let start = Instant::now();
    let coeffs = Preset::GaussDerivative.coefficients(Direction::Forward).unwrap();
    let curve = error_scan(&coeffs, ReferenceKind::NuGauss, -TWO_PI, TWO_PI, GRID).unwrap();
    let worst = curve.max_abs_diff();
    let elapsed = start.elapsed();
    let pass = worst < 7.3e-12 && elapsed < Duration::from_secs(1);
    report("2", "nu e^(-nu^2) reproduction", pass, format!("max_abs_diff={worst:.4e} < 7.3e-12"), elapsed);
    assert!(worst < 7.3e-12);
    assert!(elapsed < Duration::from_secs(1));
}

#[test]
fn criterion_3_identity_suite() {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for m in 1..=12 {
        let order = IdentityOrder::new(m).unwrap();
        for t in seeded(3_000 + m as u64, -100.0, 100.0, 200) {
            worst = worst.max((viete_product(t, order) - cosine_sum(t, order)).abs());
        }
    }
    let elapsed = start.elapsed();
    let pass = worst <= 1e-11 && elapsed < Duration::from_secs(1);
    report("3", "product-to-sum identity, M = 1..12", pass, format!("max_dev={worst:.4e} <= 1e-11"), elapsed);
    assert!(worst <= 1e-11);
    assert!(elapsed < Duration::from_secs(1));
}

#[test]
fn criterion_4_voigt() {
    let start = Instant::now();
    let coeffs = Preset::Gauss.coefficients(Direction::Forward).unwrap();
    let xs: Vec<f64> = (0..200).map(|i| -TWO_PI + 2.0 * TWO_PI * i as f64 / 199.0).collect();
    let rows = voigt_curve(&coeffs, 1.0, &xs).unwrap();
    let worst = rows.iter().map(|r| r.abs_diff).fold(0.0, f64::max);
    let at_origin = voigt_residue(&coeffs, VoigtPoint::new(0.0, 1.0).unwrap()).unwrap().value;
    let closed = (at_origin - VOIGT_0_1).abs();
    let elapsed = start.elapsed();
    let pass = worst <= 1e-12 && closed <= 1e-12 && elapsed < Duration::from_secs(10);
    report(
        "4",
        "Voigt by residues vs quadrature, y = 1",
        pass,
        format!("max_abs_diff={worst:.4e} <= 1e-12, |K(0,1) - e erfc(1)|={closed:.4e} <= 1e-12"),
        elapsed,
    );
    assert!(worst <= 1e-12);
    assert!(closed <= 1e-12);
    assert!(elapsed < Duration::from_secs(10));
}

#[test]
fn criterion_5_inverse_path() {
    let start = Instant::now();
    let coeffs = Preset::Gauss.coefficients(Direction::Inverse).unwrap();
    let curve = error_scan(&coeffs, ReferenceKind::Gauss, -TWO_PI, TWO_PI, GRID).unwrap();
    let worst = curve.max_abs_diff();
    let elapsed = start.elapsed();
    let pass = worst <= 1e-9 && elapsed < Duration::from_secs(1);
    report("5", "inverse approximant of e^(-t^2)", pass, format!("max_abs_diff={worst:.4e} <= 1e-9"), elapsed);
    assert!(worst <= 1e-9);
    assert!(elapsed < Duration::from_secs(1));
}

#[test]
fn criterion_6_oracle_self_certification() {
    let start = Instant::now();
    let spec = QuadratureSpec::new(-6.0, 6.0, 1e-13);
    let mut worst: f64 = 0.0;
    for nu in seeded(6, -3.0, 3.0, 20) {
        let q = fourier_forward_quadrature(TargetKind::Gauss, 1, 0.0, nu, &spec).unwrap();
        worst = worst.max((q - Complex64::new((-nu * nu).exp(), 0.0)).norm());
    }
    let elapsed = start.elapsed();
    let pass = worst <= 1e-12 && elapsed < Duration::from_secs(5);
    report("6", "quadrature of the Gaussian pair", pass, format!("max_abs_diff={worst:.4e} <= 1e-12"), elapsed);
    assert!(worst <= 1e-12);
    assert!(elapsed < Duration::from_secs(5));
}

fn sinc_coeffs_with_sigma(sigma: f64) -> sinc_rational::CoefficientSet {
    let p = ApproxParams {
        sigma,
        ..Preset::Sinc.params()
    };
    compute_coefficients(&sample_grid(TargetKind::RectSurrogate, &p).unwrap(), Direction::Forward).unwrap()
}

fn limit_discrepancy(coeffs: &sinc_rational::CoefficientSet, nu: f64) -> f64 {
    let two_a = 2.0 * coeffs.params().shift;
    let finite = damped_expansion_quadrature(coeffs, nu, UpperLimit::Finite(two_a), 1e-12, 1_000_000).unwrap();
    let infinite = damped_expansion_quadrature(coeffs, nu, UpperLimit::Infinite, 1e-12, 1_000_000).unwrap();
    (finite - infinite).norm()
}

#[test]
fn criterion_7a_upper_limit_replacement() {
    let start = Instant::now();
    let coeffs = sinc_coeffs_with_sigma(2.7);
    let worst = seeded(7, -TWO_PI, TWO_PI, 10)
        .into_iter()
        .map(|nu| limit_discrepancy(&coeffs, nu))
        .fold(0.0, f64::max);
    let elapsed = start.elapsed();
    let pass = worst <= 1e-6 && elapsed < Duration::from_secs(10);
    report(
        "7a",
        "upper limit 2a vs infinity, sinc preset",
        pass,
        format!("max_abs_diff={worst:.4e} <= 1e-6"),
        elapsed,
    );
    assert!(worst <= 1e-6, "tail beyond 2a is {worst:e}");
    assert!(elapsed < Duration::from_secs(10));
}

#[test]
fn criterion_7b_tail_shrinks_with_damping() {
    let start = Instant::now();
    let sets: Vec<_> = [1.0, 2.7, 5.0].into_iter().map(sinc_coeffs_with_sigma).collect();
    let mut monotone = true;
    let mut detail = Vec::new();
    for nu in seeded(7, -TWO_PI, TWO_PI, 10) {
        let d: Vec<f64> = sets.iter().map(|c| limit_discrepancy(c, nu)).collect();
        monotone &= d[0] >= d[1] && d[1] >= d[2];
        detail.push(format!("{:.2e}/{:.2e}/{:.2e}", d[0], d[1], d[2]));
    }
    let elapsed = start.elapsed();
    let pass = monotone && elapsed < Duration::from_secs(10);
    report(
        "7b",
        "tail nonincreasing over sigma = 1, 2.7, 5",
        pass,
        format!("monotone={monotone} [{}]", detail.join(" ")),
        elapsed,
    );
    assert!(monotone);
    assert!(elapsed < Duration::from_secs(10));
}

#[test]
fn criterion_8_rearrangement_equivalence() {
    let start = Instant::now();
    let p = Preset::Sinc.params();
    let samples = sample_grid(TargetKind::RectSurrogate, &p).unwrap();
    let coeffs = compute_coefficients(&samples, Direction::Forward).unwrap();
    let mut worst: f64 = 0.0;
    for nu in seeded(8, -TWO_PI, TWO_PI, 50) {
        let by_terms = expansion_transform_by_terms(&samples, nu).unwrap();
        let shifted = Complex64::new(0.0, 2.0 * PI * nu * p.shift).exp() * by_terms;
        let approx = eval_forward(&coeffs, nu).unwrap();
        worst = worst.max((approx - shifted).norm() / shifted.norm());
    }
    let elapsed = start.elapsed();
    let pass = worst <= 1e-12 && elapsed < Duration::from_secs(5);
    report("8", "closed form per (m, n) vs rational form", pass, format!("max_rel_diff={worst:.4e} <= 1e-12"), elapsed);
    assert!(worst <= 1e-12);
    assert!(elapsed < Duration::from_secs(5));
}
