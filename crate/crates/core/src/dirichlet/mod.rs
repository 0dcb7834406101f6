//! Primes, Dirichlet characters modulo an odd prime, and the averaged
//! 1-level density of the family of L-functions of that conductor.

mod characters;
mod one_level;
mod primes;

pub use characters::{primitive_root, CharacterTable};
pub use one_level::{one_level_density, required_sieve_limit, OneLevelDensity, DEVIATION_CONSTANT};
pub use primes::{is_prime_trial, sieve, PrimeTable};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DirichletError {
    #[error("sieve limit must be at least 2, got {0}")]
    SieveLimit(u64),
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("{k} is not coprime to the modulus {m}")]
    NotCoprime { k: u64, m: u64 },
    #[error("prime argument {0} equals the modulus")]
    PrimeEqualsModulus(u64),
    #[error("character sum {re} + {im}i is not an integer within tolerance")]
    NotIntegral { re: f64, im: f64 },
    #[error("support σ = {0} refused: the prime side is only controlled for 0 < σ < 2")]
    SigmaTooLarge(f64),
    #[error("sieve limit {limit} too small, need at least {required}")]
    InsufficientSieve { limit: u64, required: u64 },
    #[error("log(m/π) must be positive, modulus {0} is too small")]
    ConductorTooSmall(u64),
    #[error("the 1-level density takes a test function in the 2π convention")]
    WrongConvention,
}
