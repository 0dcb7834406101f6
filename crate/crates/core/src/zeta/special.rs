//! Complex log-gamma, digamma and the Riemann–Siegel theta function.

use std::f64::consts::PI;

use num_complex::Complex64;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// B_{2j} / (2j(2j−1)) for the Stirling series, j = 1..8.
const STIRLING: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
];

/// B_{2k} / (2k) for the digamma asymptotic series, k = 1..6.
const DIGAMMA: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32_760.0,
];

/// ln Γ(z) on the branch continuous from the positive real axis, Re z > 0.
pub fn ln_gamma(z: Complex64) -> Complex64 {
    debug_assert!(z.re > 0.0, "ln_gamma needs Re z > 0, got {z}");
    let mut shift = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.norm() < 15.0 {
        shift += w.ln();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv;
    for c in STIRLING {
        series += power * c;
        power *= inv2;
    }
    (w - 0.5) * w.ln() - w + LN_SQRT_2PI + series - shift
}

/// ψ(z) = Γ′(z)/Γ(z) for Re z > 0: recurrence up to Re z ≥ 8, then six
/// terms of the asymptotic series.
pub fn digamma(z: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut w = z;
    while w.re < 8.0 {
        acc -= w.inv();
        w += 1.0;
    }
    let inv2 = (w * w).inv();
    let mut series = Complex64::new(0.0, 0.0);
    let mut power = inv2;
    for c in DIGAMMA {
        series += power * c;
        power *= inv2;
    }
    acc + w.ln() - 0.5 * w.inv() - series
}

/// Riemann–Siegel theta, θ(t) = arg Γ(1/4 + it/2) − (t/2) log π.
///
/// Uses the asymptotic expansion with three correction terms for t ≥ 10 and
/// log-gamma below.
pub fn theta(t: f64) -> f64 {
    if t.abs() < 10.0 {
        return ln_gamma(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln();
    }
    let sign = t.signum();
    let t = t.abs();
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    let value = 0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
        + inv * (1.0 / 48.0 + inv2 * (7.0 / 5760.0 + inv2 * (31.0 / 80_640.0)));
    sign * value
}

/// θ′(t) = ½ Re ψ(1/4 + it/2) − ½ log π.
pub fn theta_prime(t: f64) -> f64 {
    0.5 * digamma(Complex64::new(0.25, 0.5 * t)).re - 0.5 * PI.ln()
}
