//! Reference laws and test functions against quadrature oracles.

use std::f64::consts::PI;

use spectra_lab::quad::{integrate, integrate_panels};
use spectra_lab::spectral_stats::{semicircle_moment, weibull_stats, ReferenceDensity, Weibull};
use spectra_lab::test_function::{fejer_phi, fejer_phi_hat};

fn continuous_laws() -> Vec<ReferenceDensity> {
    vec![
        ReferenceDensity::Semicircle,
        ReferenceDensity::WignerGoe,
        ReferenceDensity::WignerGue,
        ReferenceDensity::PoissonSpacing,
        ReferenceDensity::weibull(1.0, 1.0).unwrap(),
        ReferenceDensity::weibull(2.0, 2.0 / PI.sqrt()).unwrap(),
        ReferenceDensity::weibull(0.7, 1.3).unwrap(),
        ReferenceDensity::weibull(3.5, 0.4).unwrap(),
        ReferenceDensity::PoissonCount(3),
    ]
}

fn mass(law: &ReferenceDensity, weight: impl Fn(f64) -> f64) -> f64 {
    let (lo, hi) = law.support();
    if hi.is_finite() {
        return integrate(|x| weight(x) * law.pdf(x), lo, hi, 1e-13, 45).value;
    }
    // dyadic panels out to 512: heavy Weibull tails (k < 1) still carry
    // ~1e-8 mass beyond 80, and a single panel would miss the bulk near 0
    let mut edges = vec![lo, lo + 0.125];
    while *edges.last().unwrap() < 512.0 {
        let next = 2.0 * edges.last().unwrap();
        edges.push(next);
    }
    integrate_panels(|x| weight(x) * law.pdf(x), &edges, 1e-14).value
}

#[test]
fn densities_integrate_to_one() {
    for law in continuous_laws() {
        let m = mass(&law, |_| 1.0);
        assert!((m - 1.0).abs() <= 1e-8, "{}: {m}", law.name());
    }
}

#[test]
fn poisson_count_pmf_sums_to_one() {
    let total: f64 = (0..200).map(|j| ReferenceDensity::PoissonCount(j).pdf(2.5)).sum();
    assert!((total - 1.0).abs() < 1e-12, "{total}");
}

#[test]
fn spacing_surmises_have_unit_mean() {
    for law in [ReferenceDensity::WignerGoe, ReferenceDensity::WignerGue, ReferenceDensity::PoissonSpacing] {
        let mean = mass(&law, |x| x);
        assert!((mean - 1.0).abs() <= 1e-8, "{}: {mean}", law.name());
    }
}

#[test]
fn cdfs_integrate_their_densities() {
    for law in continuous_laws() {
        let (lo, _) = law.support();
        for x in [0.1, 0.5, 0.9, 1.7, 3.0] {
            let x = if law == ReferenceDensity::Semicircle { x / 3.0 } else { x };
            let integral = integrate(|t| law.pdf(t), lo, x, 1e-14, 45).value;
            assert!((integral - law.cdf(x).unwrap()).abs() < 1e-10, "{} at {x}", law.name());
        }
    }
}

#[test]
fn weibull_identities() {
    let exp_law = ReferenceDensity::weibull(1.0, 1.0).unwrap();
    let wigner = ReferenceDensity::weibull(2.0, 2.0 / PI.sqrt()).unwrap();
    for i in 0..500 {
        let x = i as f64 * 0.01;
        assert!((exp_law.pdf(x) - (-x).exp()).abs() < 1e-15);
        assert!((wigner.pdf(x) - ReferenceDensity::WignerGoe.pdf(x)).abs() < 1e-14);
    }
    let w = Weibull::new(1.7, 0.8).unwrap();
    let s = weibull_stats(w.shape(), w.scale()).unwrap();
    let law = ReferenceDensity::Weibull(w);
    assert!((mass(&law, |x| x) - s.mean).abs() < 1e-9);
    assert!((law.cdf(s.median).unwrap() - 0.5).abs() < 1e-14);
}

#[test]
fn semicircle_moments_match_quadrature() {
    for k in 0..=12u32 {
        let q = mass(&ReferenceDensity::Semicircle, |x| x.powi(k as i32));
        assert!((q - semicircle_moment(k)).abs() < 1e-10, "k = {k}: {q} vs {}", semicircle_moment(k));
    }
    assert_eq!(semicircle_moment(6), 5.0 / 64.0);
}

/// ∫ φ(x) e^{−2πixξ} dx over ℝ, with φ the Fejér kernel of support σ, by
/// panels between the zeros of φ out to X, plus the exact non-oscillatory
/// tail ∫_X^∞ 1/(2π²σx²) dx when ξ = 0.
fn fejer_transform_by_quadrature(sigma: f64, xi: f64) -> f64 {
    let periods = 20_000;
    let edges: Vec<f64> = (0..=periods).map(|k| k as f64 / sigma).collect();
    let head = integrate_panels(|x| fejer_phi(sigma, x) * (2.0 * PI * xi * x).cos(), &edges, 1e-15).value;
    let x_end = periods as f64 / sigma;
    let tail = if xi == 0.0 { 1.0 / (2.0 * PI * PI * sigma * x_end) } else { 0.0 };
    2.0 * (head + tail)
}

#[test]
fn fejer_pair_by_quadrature() {
    for sigma in [0.5, 1.0, 1.7] {
        let total = fejer_transform_by_quadrature(sigma, 0.0);
        assert!((total - 1.0).abs() <= 1e-8, "σ = {sigma}: ∫φ = {total}");
        for xi in [sigma / 2.0, 0.99 * sigma] {
            let q = fejer_transform_by_quadrature(sigma, xi);
            assert!((q - fejer_phi_hat(sigma, xi)).abs() <= 1e-6, "σ = {sigma}, ξ = {xi}: {q}");
        }
    }
}
