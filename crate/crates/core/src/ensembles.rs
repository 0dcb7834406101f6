//! Seeded sampling of real symmetric matrices with i.i.d. entries.
//!
//! A matrix is fully determined by `(n, distribution, seed)`. Each seed owns
//! a ChaCha8 stream (`master` selects the key, `stream` the stream id), so
//! matrices can be drawn in any order on any number of threads and still
//! come out bit-identical.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use rand::distr::{Distribution, Open01};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum EnsembleError {
    #[error("invalid matrix dimension {0}; must be at least 1")]
    InvalidDimension(usize),
    #[error("expected {expected} upper-triangle entries for n = {n}, got {got}")]
    EntryCount { n: usize, expected: usize, got: usize },
    #[error("rows do not form a symmetric square matrix: {0}")]
    NotSymmetric(String),
    #[error("unknown entry distribution `{0}` (expected gaussian, uniform or cauchy)")]
    UnknownDistribution(String),
}

/// Law of the independent matrix entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryDistribution {
    /// Mean 0, variance 1.
    #[serde(rename = "gaussian")]
    StandardGaussian,
    /// Uniform on [−1, 1] (variance 1/3).
    #[serde(rename = "uniform")]
    UniformSymmetric,
    /// Density 1/(π(1+x²)); no mean, no variance.
    Cauchy,
}

impl EntryDistribution {
    pub fn name(self) -> &'static str {
        match self {
            EntryDistribution::StandardGaussian => "gaussian",
            EntryDistribution::UniformSymmetric => "uniform",
            EntryDistribution::Cauchy => "cauchy",
        }
    }

    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R) -> f64 {
        match self {
            EntryDistribution::StandardGaussian => sample_gaussian(rng),
            EntryDistribution::UniformSymmetric => sample_uniform(rng),
            EntryDistribution::Cauchy => sample_cauchy(rng),
        }
    }
}

impl fmt::Display for EntryDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for EntryDistribution {
    type Err = EnsembleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "gaussian" | "normal" => Ok(EntryDistribution::StandardGaussian),
            "uniform" => Ok(EntryDistribution::UniformSymmetric),
            "cauchy" => Ok(EntryDistribution::Cauchy),
            _ => Err(EnsembleError::UnknownDistribution(s.to_string())),
        }
    }
}

/// Standard normal draw (ziggurat).
pub fn sample_gaussian<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    StandardNormal.sample(rng)
}

/// Uniform draw on [−1, 1).
pub fn sample_uniform<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    2.0 * rng.random::<f64>() - 1.0
}

/// Standard Cauchy draw via the inverse CDF on an open-interval uniform.
pub fn sample_cauchy<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    let u: f64 = Open01.sample(rng);
    cauchy_inverse_cdf(u)
}

/// Quantile function of the standard Cauchy law, `tan(π(u − 1/2))`.
pub fn cauchy_inverse_cdf(u: f64) -> f64 {
    (PI * (u - 0.5)).tan()
}

/// Identifies one matrix: `master` is the experiment seed, `stream` the
/// per-matrix substream index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Seed {
    pub master: u64,
    pub stream: u64,
}

impl Seed {
    pub fn new(master: u64, stream: u64) -> Self {
        Seed { master, stream }
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.master);
        rng.set_stream(self.stream);
        rng
    }
}

impl fmt::Display for Seed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.master, self.stream)
    }
}

/// An n×n real symmetric matrix stored as its packed upper triangle
/// (row-major, `a[i][j]` for `i <= j`).
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    upper: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn from_upper(n: usize, upper: Vec<f64>) -> Result<Self, EnsembleError> {
        if n == 0 {
            return Err(EnsembleError::InvalidDimension(n));
        }
        let expected = n * (n + 1) / 2;
        if upper.len() != expected {
            return Err(EnsembleError::EntryCount { n, expected, got: upper.len() });
        }
        Ok(SymmetricMatrix { n, upper })
    }

    /// Builds a matrix from full rows, checking squareness and exact symmetry.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self, EnsembleError> {
        let n = rows.len();
        if n == 0 {
            return Err(EnsembleError::InvalidDimension(0));
        }
        let mut upper = Vec::with_capacity(n * (n + 1) / 2);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(EnsembleError::NotSymmetric(format!("row {i} has length {}", row.len())));
            }
            for j in i..n {
                if row[j] != rows[j][i] {
                    return Err(EnsembleError::NotSymmetric(format!("a[{i}][{j}] != a[{j}][{i}]")));
                }
                upper.push(row[j]);
            }
        }
        Ok(SymmetricMatrix { n, upper })
    }

    pub fn identity(n: usize) -> Result<Self, EnsembleError> {
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Packed upper triangle, row-major.
    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    fn offset(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        i * self.n - i * (i + 1) / 2 + j
    }

    /// Logical entry `(i, j)`; symmetric by construction.
    pub fn get(&self, i: usize, j: usize) -> f64 {
        assert!(i < self.n && j < self.n, "index ({i}, {j}) out of bounds for n = {}", self.n);
        self.upper[self.offset(i, j)]
    }

    /// Dense row-major copy.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n;
        let mut out = vec![0.0; n * n];
        let mut k = 0;
        for i in 0..n {
            for j in i..n {
                out[i * n + j] = self.upper[k];
                out[j * n + i] = self.upper[k];
                k += 1;
            }
        }
        out
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.upper.iter().fold(0.0_f64, |m, x| m.max(x.abs()))
    }

    /// `P A Pᵀ` for the permutation sending index `i` to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let n = self.n;
        let mut upper = Vec::with_capacity(self.upper.len());
        for i in 0..n {
            for j in i..n {
                upper.push(self.get(perm[i], perm[j]));
            }
        }
        SymmetricMatrix { n, upper }
    }

    pub fn is_finite(&self) -> bool {
        self.upper.iter().all(|x| x.is_finite())
    }
}

/// Draws an n×n symmetric matrix whose n(n+1)/2 upper-triangle entries
/// (diagonal included) are independent draws from `dist`.
pub fn sample_matrix(n: usize, dist: EntryDistribution, seed: Seed) -> Result<SymmetricMatrix, EnsembleError> {
    if n == 0 {
        return Err(EnsembleError::InvalidDimension(n));
    }
    let mut rng = seed.rng();
    let upper = (0..n * (n + 1) / 2).map(|_| dist.sample(&mut rng)).collect();
    Ok(SymmetricMatrix { n, upper })
}
