//! Sieve of Eratosthenes with the von Mangoldt function.

use serde::Serialize;

use super::DirichletError;

/// Primes up to `limit` and Λ(n) for n ≤ limit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
    /// Smallest prime factor of n, 0 for n < 2.
    #[serde(skip)]
    spf: Vec<u32>,
}

pub fn sieve(limit: u64) -> Result<PrimeTable, DirichletError> {
    if limit < 2 {
        return Err(DirichletError::SieveLimit(limit));
    }
    let n = usize::try_from(limit).map_err(|_| DirichletError::SieveLimit(limit))?;
    let mut spf = vec![0u32; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if spf[i] == 0 {
            spf[i] = i as u32;
            primes.push(i as u64);
            let mut j = i.saturating_mul(i);
            while j <= n {
                if spf[j] == 0 {
                    spf[j] = i as u32;
                }
                j += i;
            }
        }
    }
    Ok(PrimeTable { limit, primes, spf })
}

impl PrimeTable {
    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// Primes ≤ x.
    pub fn primes_up_to(&self, x: u64) -> &[u64] {
        assert!(x <= self.limit, "prime table read at {x} beyond its limit {}", self.limit);
        &self.primes[..self.primes.partition_point(|&p| p <= x)]
    }

    pub fn is_prime(&self, n: u64) -> bool {
        assert!(n <= self.limit, "prime table read at {n} beyond its limit {}", self.limit);
        n >= 2 && self.spf[n as usize] as u64 == n
    }

    /// Λ(n): log p if n = p^r, else 0.
    pub fn lambda(&self, n: u64) -> f64 {
        assert!(n <= self.limit, "prime table read at {n} beyond its limit {}", self.limit);
        if n < 2 {
            return 0.0;
        }
        let p = self.spf[n as usize] as u64;
        let mut m = n;
        while m % p == 0 {
            m /= p;
        }
        if m == 1 {
            (p as f64).ln()
        } else {
            0.0
        }
    }
}

/// Trial-division primality, for small arguments and cross-checks.
pub fn is_prime_trial(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
