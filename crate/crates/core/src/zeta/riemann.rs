//! ζ(s) by Euler–Maclaurin summation and Hardy's Z-function on the critical line.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::special::theta;

/// Correction terms available to the Euler–Maclaurin tail.
const MAX_CORRECTIONS: usize = 30;

/// Precomputed logarithms and square roots for Euler–Maclaurin sums up to a
/// fixed height.
#[derive(Debug, Clone)]
pub struct ZetaEvaluator {
    t_max: f64,
    ln_n: Vec<f64>,
    inv_sqrt_n: Vec<f64>,
    /// B_{2k}/(2k)! for k = 1..=MAX_CORRECTIONS.
    bernoulli: Vec<f64>,
}

/// Number of directly summed terms used at height `t`.
pub fn terms_for_height(t: f64) -> usize {
    (t.abs() / PI).ceil() as usize + 15
}

/// B_{2k}/(2k)! = (−1)^{k+1} 2 ζ(2k) / (2π)^{2k}.
fn bernoulli_ratios() -> Vec<f64> {
    let two_pi = 2.0 * PI;
    (1..=MAX_CORRECTIONS)
        .map(|k| {
            let even_zeta = match k {
                1 => PI.powi(2) / 6.0,
                2 => PI.powi(4) / 90.0,
                3 => PI.powi(6) / 945.0,
                4 => PI.powi(8) / 9450.0,
                _ => {
                    let s = 2 * k as i32;
                    let head: f64 = (1..=60).rev().map(|n| (n as f64).powi(-s)).sum();
                    head + 60f64.powi(1 - s) / (s - 1) as f64
                }
            };
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            sign * 2.0 * even_zeta / two_pi.powi(2 * k as i32)
        })
        .collect()
}

impl ZetaEvaluator {
    /// Evaluator valid for |Im s| ≤ `t_max`.
    pub fn new(t_max: f64) -> Self {
        let terms = terms_for_height(t_max) + 1;
        let ln_n: Vec<f64> = (0..=terms).map(|n| if n == 0 { 0.0 } else { (n as f64).ln() }).collect();
        let inv_sqrt_n = (0..=terms).map(|n| if n == 0 { 0.0 } else { 1.0 / (n as f64).sqrt() }).collect();
        ZetaEvaluator { t_max, ln_n, inv_sqrt_n, bernoulli: bernoulli_ratios() }
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    /// ζ(s) for Re s > 0, s ≠ 1, |Im s| ≤ t_max.
    pub fn zeta(&self, s: Complex64) -> Complex64 {
        let n = terms_for_height(s.im);
        assert!(n < self.ln_n.len(), "height {} beyond evaluator range {}", s.im, self.t_max);
        let mut head = Complex64::new(0.0, 0.0);
        for k in 1..n {
            head += (-s * self.ln_n[k]).exp();
        }
        head + self.tail(s, n)
    }

    /// N^{1−s}/(s−1) + N^{−s}/2 + Σ_k B_{2k}/(2k)! · s(s+1)…(s+2k−2) N^{−s−2k+1}.
    fn tail(&self, s: Complex64, n: usize) -> Complex64 {
        let big_n = n as f64;
        let n_pow = (-s * self.ln_n[n]).exp();
        let mut total = n_pow * big_n / (s - 1.0) + n_pow * 0.5;
        // rising = s(s+1)…(s+2k−2), scaled by N^{−2k+1}
        let mut rising = s / big_n;
        let inv_n2 = 1.0 / (big_n * big_n);
        let mut last = f64::INFINITY;
        for (k, b) in self.bernoulli.iter().enumerate() {
            let term = n_pow * rising * *b;
            let size = term.norm();
            total += term;
            if size < 1e-17 * total.norm().max(1e-300) || size > last {
                break;
            }
            last = size;
            let j = 2.0 * (k + 1) as f64;
            rising *= (s + (j - 1.0)) * (s + j) * inv_n2;
        }
        total
    }

    /// Hardy's Z(t) = e^{iθ(t)} ζ(1/2 + it), real for real t.
    pub fn hardy_z(&self, t: f64) -> f64 {
        let n = terms_for_height(t);
        assert!(n < self.ln_n.len(), "height {t} beyond evaluator range {}", self.t_max);
        let th = theta(t);
        let mut head = 0.0;
        for k in 1..n {
            head += self.inv_sqrt_n[k] * (th - t * self.ln_n[k]).cos();
        }
        let s = Complex64::new(0.5, t);
        let rotated = Complex64::from_polar(1.0, th) * self.tail(s, n);
        head + rotated.re
    }
}
