//! Dirichlet characters modulo an odd prime through a discrete-log table.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::primes::is_prime_trial;
use super::DirichletError;

fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn require_odd_prime(m: u64) -> Result<(), DirichletError> {
    if m < 3 || !is_prime_trial(m) {
        return Err(DirichletError::NotOddPrime(m));
    }
    Ok(())
}

/// Smallest generator of (Z/mZ)* for an odd prime m.
pub fn primitive_root(m: u64) -> Result<u64, DirichletError> {
    require_odd_prime(m)?;
    let order = m - 1;
    let factors = distinct_prime_factors(order);
    let g = (2..m)
        .find(|&g| factors.iter().all(|&q| mod_pow(g, order / q, m) != 1))
        .expect("a cyclic group has a generator");
    Ok(g)
}

/// Characters χ_ℓ(n) = exp(2πi ℓ ind(n)/(m−1)) for ℓ = 0, …, m−2, where
/// ind is the discrete log base the smallest primitive root g.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    m: u64,
    g: u64,
    /// index[n] = ind(n) for 1 ≤ n < m; index[0] is unused.
    index: Vec<u32>,
    /// roots[k] = exp(2πik/(m−1)).
    roots: Vec<Complex64>,
}

impl CharacterTable {
    pub fn new(m: u64) -> Result<Self, DirichletError> {
        let g = primitive_root(m)?;
        let order = (m - 1) as usize;
        let mut index = vec![0u32; m as usize];
        let mut x = 1u64;
        for k in 0..order {
            index[x as usize] = k as u32;
            x = x * g % m;
        }
        let roots = (0..order)
            .map(|k| Complex64::from_polar(1.0, 2.0 * PI * k as f64 / order as f64))
            .collect();
        Ok(CharacterTable { m, g, index, roots })
    }

    pub fn modulus(&self) -> u64 {
        self.m
    }

    pub fn generator(&self) -> u64 {
        self.g
    }

    /// m − 1, the number of characters.
    pub fn order(&self) -> u64 {
        self.m - 1
    }

    /// Discrete log of a unit n mod m.
    pub fn index(&self, n: u64) -> Option<u64> {
        let r = n % self.m;
        (r != 0).then(|| self.index[r as usize] as u64)
    }

    /// χ_ℓ(n), zero on multiples of m.
    pub fn chi(&self, ell: u64, n: u64) -> Complex64 {
        match self.index(n) {
            None => Complex64::new(0.0, 0.0),
            Some(ind) => {
                let k = ((ell % self.order()) as u128 * ind as u128 % self.order() as u128) as usize;
                self.roots[k]
            }
        }
    }

    /// Σ over all characters of χ(k), evaluated directly and rounded.
    /// The sum is m − 1 when k ≡ 1 (mod m) and 0 otherwise.
    pub fn character_sum_all(&self, k: u64) -> Result<i64, DirichletError> {
        if k % self.m == 0 {
            return Err(DirichletError::NotCoprime { k, m: self.m });
        }
        let sum: Complex64 = (0..self.order()).map(|ell| self.chi(ell, k)).sum();
        self.round_checked(sum)
    }

    fn round_checked(&self, sum: Complex64) -> Result<i64, DirichletError> {
        let rounded = sum.re.round();
        let tol = 1e-8 * self.m as f64;
        if (sum.re - rounded).abs() > tol || sum.im.abs() > tol {
            return Err(DirichletError::NotIntegral { re: sum.re, im: sum.im });
        }
        Ok(rounded as i64)
    }

    fn check_prime_argument(&self, p: u64) -> Result<(), DirichletError> {
        if p == self.m {
            return Err(DirichletError::PrimeEqualsModulus(p));
        }
        Ok(())
    }

    /// Σ_{χ≠χ₀} χ(p) = m − 2 if p ≡ 1 (mod m), else −1.
    pub fn nonprincipal_sum(&self, p: u64) -> Result<i64, DirichletError> {
        self.check_prime_argument(p)?;
        Ok(if p % self.m == 1 { self.m as i64 - 2 } else { -1 })
    }

    /// Σ_{χ≠χ₀} χ(p)² = Σ_{χ≠χ₀} χ(p²) = m − 2 if p² ≡ 1 (mod m), else −1.
    pub fn nonprincipal_square_sum(&self, p: u64) -> Result<i64, DirichletError> {
        self.check_prime_argument(p)?;
        let r = p % self.m;
        Ok(if (r as u128 * r as u128) % self.m as u128 == 1 { self.m as i64 - 2 } else { -1 })
    }

    /// Σ_{ℓ=1}^{m−2} χ_ℓ(p) by direct summation.
    pub fn nonprincipal_sum_direct(&self, p: u64) -> Result<i64, DirichletError> {
        self.check_prime_argument(p)?;
        let sum: Complex64 = (1..self.order()).map(|ell| self.chi(ell, p)).sum();
        self.round_checked(sum)
    }

    /// Σ_{ℓ=1}^{m−2} χ_ℓ(p)² by direct summation.
    pub fn nonprincipal_square_sum_direct(&self, p: u64) -> Result<i64, DirichletError> {
        self.check_prime_argument(p)?;
        let sum: Complex64 = (1..self.order()).map(|ell| self.chi(ell, p).powu(2)).sum();
        self.round_checked(sum)
    }
}
