//! Family-averaged 1-level density of Dirichlet L-functions of prime
//! conductor m, evaluated on its prime side.
//!
//! With L = log(m/π) and Fejér φ of transform support σ < 2,
//!
//!   D(φ) = ∫φ − (2/L) Σ_p (log p/√p) φ̂(log p/L) a₁(p)
//!             − (2/L) Σ_p (log p/p) φ̂(2 log p/L) a₂(p),
//!
//! where a₁(p) and a₂(p) average χ(p) and χ(p)² over the m − 2
//! non-principal characters.

use serde::{Deserialize, Serialize};

use super::characters::CharacterTable;
use super::primes::PrimeTable;
use super::DirichletError;
use crate::par::{deterministic_sum, Execution};
use crate::test_function::{Convention, TestFunction};

/// Constant C in the reported bound C·m^{σ/2}/m.
pub const DEVIATION_CONSTANT: f64 = 10.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OneLevelDensity {
    pub m: u64,
    pub sigma: f64,
    pub integral_phi: f64,
    pub value: f64,
    pub deviation: f64,
    pub bound: f64,
    pub primes_used: u64,
    pub generator: u64,
    /// −(2/L) Σ (log p/√p) φ̂(log p/L) a₁(p)
    pub first_sum: f64,
    /// −(2/L) Σ (log p/p) φ̂(2 log p/L) a₂(p)
    pub second_sum: f64,
}

/// Smallest sieve limit accepted for (m, σ): m^σ, rounded up.
pub fn required_sieve_limit(m: u64, sigma: f64) -> u64 {
    (m as f64).powf(sigma).ceil() as u64
}

pub fn one_level_density(
    m: u64,
    tf: &TestFunction,
    primes: &PrimeTable,
    exec: Execution,
) -> Result<OneLevelDensity, DirichletError> {
    if tf.convention != Convention::TwoPi {
        return Err(DirichletError::WrongConvention);
    }
    let sigma = tf.sigma;
    if !(sigma > 0.0 && sigma < 2.0) {
        return Err(DirichletError::SigmaTooLarge(sigma));
    }
    let table = CharacterTable::new(m)?;
    let log_conductor = (m as f64 / std::f64::consts::PI).ln();
    if log_conductor <= 0.0 {
        return Err(DirichletError::ConductorTooSmall(m));
    }
    let required = required_sieve_limit(m, sigma);
    if primes.limit() < required {
        return Err(DirichletError::InsufficientSieve { limit: primes.limit(), required });
    }
    let families = (m - 2) as f64;

    // φ̂(log p/L) ≠ 0 ⇔ p < e^{σL} = (m/π)^σ ≤ m^σ ≤ limit.
    let first_cut = (sigma * log_conductor).exp();
    let first_primes = primes.primes_up_to((first_cut.floor() as u64).min(primes.limit()));
    let second_cut = (0.5 * sigma * log_conductor).exp();
    let second_primes = primes.primes_up_to((second_cut.floor() as u64).min(primes.limit()));

    let first = deterministic_sum(exec, first_primes, |&p| {
        if p == m {
            return 0.0;
        }
        let lp = (p as f64).ln();
        let a1 = table.nonprincipal_sum(p).expect("p ≠ m") as f64 / families;
        lp / (p as f64).sqrt() * tf.transform(lp / log_conductor) * a1
    });
    let second = deterministic_sum(exec, second_primes, |&p| {
        if p == m {
            return 0.0;
        }
        let lp = (p as f64).ln();
        let a2 = table.nonprincipal_square_sum(p).expect("p ≠ m") as f64 / families;
        lp / p as f64 * tf.transform(2.0 * lp / log_conductor) * a2
    });
    let first_sum = -2.0 * first / log_conductor;
    let second_sum = -2.0 * second / log_conductor;
    let integral_phi = tf.integral_phi();
    let value = integral_phi + first_sum + second_sum;
    let used = first_primes.iter().filter(|&&p| p != m && tf.transform((p as f64).ln() / log_conductor) != 0.0).count();
    Ok(OneLevelDensity {
        m,
        sigma,
        integral_phi,
        value,
        deviation: (value - integral_phi).abs(),
        bound: DEVIATION_CONSTANT * (m as f64).powf(sigma / 2.0) / m as f64,
        primes_used: used as u64,
        generator: table.generator(),
        first_sum,
        second_sum,
    })
}
