//! The explicit formula for ζ, checked numerically from both sides.
//!
//! For an even pair φ(r) = ∫ g(u) e^{iru} du with g supported in [−a, a],
//!
//!   Σ_γ φ(γ) = 2φ(i/2) − Σ_p Σ_k (2 log p / p^{k/2}) g(k log p)
//!              + (1/π) ∫ Re[1/(iy − ½)] φ(y) dy
//!              + (1/2π) ∫ [Re ψ(5/4 + iy/2) − log π] φ(y) dy,
//!
//! the sum running over all nontrivial zeros ½ + iγ.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::special::digamma;
use super::{ZeroTable, ZetaError};
use crate::dirichlet::PrimeTable;
use crate::par::{deterministic_sum, map_range, pairwise_sum, Execution};
use crate::quad::integrate;
use crate::test_function::{Convention, TestFunction};

/// C in the zero-gap estimate N(T+1) − N(T) ≤ C log(T+1).
pub const ZERO_GAP_CONSTANT: f64 = 2.0;

/// Quadrature panels per archimedean integral.
const PANELS: u64 = 20_000;

/// An even pair (φ, g) with g supported in [−a, a] and |φ(r)| ≤ c/r².
pub trait EvenPair: Sync {
    fn phi(&self, r: f64) -> f64;
    fn g(&self, u: f64) -> f64;
    /// a
    fn support(&self) -> f64;
    /// c with |φ(r)| ≤ c/r² for r ≠ 0.
    fn decay_constant(&self) -> f64;
    /// L with |φ(r) − φ(s)| ≤ L|r − s|.
    fn lipschitz(&self) -> f64;
    /// Width of the quadrature panels for φ (its zero spacing when periodic).
    fn panel_width(&self) -> f64;
}

impl EvenPair for TestFunction {
    fn phi(&self, r: f64) -> f64 {
        debug_assert_eq!(self.convention, Convention::PlainExp);
        TestFunction::phi(self, r)
    }

    fn g(&self, u: f64) -> f64 {
        self.transform(u)
    }

    fn support(&self) -> f64 {
        self.sigma
    }

    fn decay_constant(&self) -> f64 {
        // (σ/2π)(sin(σr/2)/(σr/2))² ≤ 2/(πσr²)
        2.0 / (PI * self.sigma)
    }

    fn lipschitz(&self) -> f64 {
        // ∫|u| g(u) du = σ²/(6π)
        self.sigma * self.sigma / (6.0 * PI)
    }

    fn panel_width(&self) -> f64 {
        self.phi_zero_spacing()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExplicitFormulaReport {
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    /// Certified bound on |lhs − rhs| from truncation, quadrature and zero precision.
    pub truncation_estimate: f64,
    pub u_max: f64,
    pub p_max: u64,
    pub zeros_used: u64,
    /// Largest ordinate in the table.
    pub zero_coverage: f64,
    /// 2φ(i/2)
    pub pole_term: f64,
    /// −Σ_p Σ_k (2 log p/p^{k/2}) g(k log p)
    pub prime_term: f64,
    pub archimedean_term: f64,
    /// Bound on 2Σ_{γ > coverage} |φ(γ)|.
    pub zero_tail_bound: f64,
    pub archimedean_error: f64,
    pub precision_error: f64,
}

/// Bound on 2Σ_{γ>T} |φ(γ)| ≤ 2 Σ_{j≥0} C log(T+j+1) · c/(T+j)².
fn zero_tail_bound(t: f64, c: f64) -> f64 {
    if c == 0.0 {
        return 0.0;
    }
    const TERMS: usize = 1_000_000;
    let head: Vec<f64> = (0..TERMS)
        .map(|j| {
            let x = t + j as f64;
            ZERO_GAP_CONSTANT * (x + 1.0).ln() * c / (x * x)
        })
        .collect();
    // ∫_X^∞ C log(x+1) c/(x−1)² dx majorizes the remaining terms; log(x+1)/(x−1)² ≤ 2 log x/x² past X ≥ 10⁶.
    let x = t + TERMS as f64;
    let rest = ZERO_GAP_CONSTANT * c * 2.0 * (x.ln() + 1.0) / (x - 1.0);
    2.0 * (pairwise_sum(&head) + rest)
}

/// Smallest table coverage meeting `tolerance` for the zero tail.
fn required_coverage(c: f64, tolerance: f64) -> f64 {
    let mut hi = 100.0;
    while zero_tail_bound(hi, c) > tolerance {
        hi *= 2.0;
    }
    let mut lo = hi / 2.0;
    for _ in 0..40 {
        let mid = 0.5 * (lo + hi);
        if zero_tail_bound(mid, c) > tolerance {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    hi.ceil()
}

/// (1/π) Re[1/(iy − ½)] + (1/2π)[Re ψ(5/4 + iy/2) − log π].
fn archimedean_weight(y: f64) -> f64 {
    -0.5 / (PI * (0.25 + y * y)) + (digamma(Complex64::new(1.25, 0.5 * y)).re - PI.ln()) / (2.0 * PI)
}

/// Checks the explicit formula on a zero table. The prime sum runs over
/// p ≤ `p_max`, which must reach e^{u_max}; the zero-side truncation must be
/// below `tolerance`.
pub fn explicit_formula_check<P: EvenPair>(
    table: &ZeroTable,
    pair: &P,
    primes: &PrimeTable,
    p_max: u64,
    tolerance: f64,
    exec: Execution,
) -> Result<ExplicitFormulaReport, ZetaError> {
    let a = pair.support();
    let required = a.exp();
    if (p_max as f64) < required || primes.limit() < p_max {
        return Err(ZetaError::PrimeLimit { p_max: p_max.min(primes.limit()) as f64, required });
    }
    let c = pair.decay_constant();
    let coverage = table.coverage();
    let zero_tail = zero_tail_bound(coverage, c);
    if zero_tail > tolerance {
        return Err(ZetaError::InsufficientCoverage { covered: coverage, required: required_coverage(c, tolerance) });
    }

    let ordinates = table.ordinates();
    let lhs = 2.0 * deterministic_sum(exec, ordinates, |&g| pair.phi(g));
    let precision_error = 2.0 * pair.lipschitz() * table.precision_hint() * ordinates.len() as f64;

    // 2φ(i/2) = 2∫g(u)e^{−u/2}du = 4∫₀^a g(u) cosh(u/2) du
    let pole = integrate(|u| pair.g(u) * (0.5 * u).cosh(), 0.0, a, 1e-15, 30);
    let pole_term = 4.0 * pole.value;

    let prime_list = primes.primes_up_to(p_max);
    let prime_term = 0.0 - deterministic_sum(exec, prime_list, |&p| {
        let lp = (p as f64).ln();
        let mut total = 0.0;
        let mut k = 1;
        while k as f64 * lp < a {
            total += 2.0 * lp / (p as f64).powf(0.5 * k as f64) * pair.g(k as f64 * lp);
            k += 1;
        }
        total
    });

    // 2∫₀^Y w φ over panels, then the tail bound 2∫_Y^∞ (1/2π)(log y + 1) c/y² dy.
    let h = pair.panel_width();
    let panel_values = map_range(exec, 0..PANELS, |k| {
        let lo = k as f64 * h;
        integrate(|y| archimedean_weight(y) * pair.phi(y), lo, lo + h, 1e-14, 30)
    });
    let values: Vec<f64> = panel_values.iter().map(|q| q.value).collect();
    let errors: Vec<f64> = panel_values.iter().map(|q| q.error).collect();
    let archimedean_term = 2.0 * pairwise_sum(&values);
    let y = PANELS as f64 * h;
    let archimedean_tail = 2.0 * c * (y.ln() + 2.0) / (2.0 * PI * y);
    let archimedean_error = 2.0 * pairwise_sum(&errors) + archimedean_tail + 4.0 * pole.error;

    let rhs = pole_term + prime_term + archimedean_term;
    let rounding = 1e-12 * (lhs.abs() + pole_term.abs() + prime_term.abs() + archimedean_term.abs());
    Ok(ExplicitFormulaReport {
        lhs,
        rhs,
        abs_diff: (lhs - rhs).abs(),
        truncation_estimate: zero_tail + archimedean_error + precision_error + rounding,
        u_max: a,
        p_max,
        zeros_used: ordinates.len() as u64,
        zero_coverage: coverage,
        pole_term,
        prime_term,
        archimedean_term,
        zero_tail_bound: zero_tail,
        archimedean_error,
        precision_error,
    })
}

/// ψ(x) = Σ_{n≤x} Λ(n) against x − Σ_ρ x^ρ/ρ − log 2π − ½ log(1 − x⁻²).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChebyshevCheck {
    pub x: f64,
    pub psi: f64,
    /// 2 Σ_{γ in table} Re(x^ρ/ρ)
    pub correction: f64,
    /// ψ(x) − x + correction + log 2π + ½ log(1 − x⁻²)
    pub residual: f64,
    pub zeros_used: u64,
}

pub fn chebyshev_check(x: f64, table: &ZeroTable, primes: &PrimeTable) -> Result<ChebyshevCheck, ZetaError> {
    if !(x >= 2.0) || x.fract() == 0.0 || !x.is_finite() {
        return Err(ZetaError::BadChebyshevPoint(x));
    }
    let n_max = x.floor() as u64;
    if primes.limit() < n_max {
        return Err(ZetaError::PrimeLimit { p_max: primes.limit() as f64, required: x });
    }
    let terms: Vec<f64> = (2..=n_max).map(|n| primes.lambda(n)).collect();
    let psi = pairwise_sum(&terms);
    let lx = x.ln();
    let zero_terms: Vec<f64> = table
        .ordinates()
        .iter()
        .map(|&g| {
            let rho = Complex64::new(0.5, g);
            2.0 * (Complex64::from_polar(x.sqrt(), g * lx) / rho).re
        })
        .collect();
    let correction = pairwise_sum(&zero_terms);
    let residual = psi - x + correction + (2.0 * PI).ln() + 0.5 * (1.0 - x.powi(-2)).ln();
    Ok(ChebyshevCheck { x, psi, correction, residual, zeros_used: table.len() as u64 })
}
