//! Ensemble pipelines: sample seeded matrices, diagonalize them in parallel
//! and reduce to histograms, spacing statistics and moments.
//!
//! Matrix `i` of an experiment always uses `Seed { master, stream: i }` and
//! per-matrix results are gathered in index order, so every report is
//! bit-identical across thread counts.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::eigen::{self, empirical_moment, EigenError, Spectrum};
use crate::ensembles::{sample_matrix, EnsembleError, EntryDistribution, Seed};
use crate::par::{map_range, pairwise_sum, Execution};
pub use crate::spectral_stats::{spacing_report, Distances, SpacingReport, SPACING_REFERENCES};
use crate::spectral_stats::{
    bulk_spacings, ks_distance, l1_histogram_distance, normalized_eigenvalues, semicircle_moment, Histogram,
    Normalization, ReferenceDensity, StatsError,
};

#[derive(Debug, Error, PartialEq)]
pub enum ExperimentError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Ensemble(#[from] EnsembleError),
    #[error("eigensolver failed on matrix with seed {seed}: {source}")]
    Eigen { seed: Seed, source: EigenError },
    #[error(transparent)]
    Stats(#[from] StatsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EnsembleConfig {
    pub n: usize,
    pub samples: usize,
    pub dist: EntryDistribution,
    pub master_seed: u64,
}

impl EnsembleConfig {
    pub fn new(n: usize, samples: usize, dist: EntryDistribution, master_seed: u64) -> Self {
        EnsembleConfig { n, samples, dist, master_seed }
    }

    fn validate(&self) -> Result<(), ExperimentError> {
        if self.n == 0 {
            return Err(ExperimentError::InvalidConfig("matrix dimension must be at least 1".into()));
        }
        if self.samples == 0 {
            return Err(ExperimentError::InvalidConfig("number of samples must be at least 1".into()));
        }
        Ok(())
    }

    pub fn seed(&self, index: u64) -> Seed {
        Seed::new(self.master_seed, index)
    }

    /// Spectrum of matrix `index`.
    pub fn spectrum(&self, index: u64) -> Result<Spectrum, ExperimentError> {
        let seed = self.seed(index);
        let matrix = sample_matrix(self.n, self.dist, seed)?;
        eigen::eigenvalues(&matrix).map_err(|source| ExperimentError::Eigen { seed, source })
    }

    /// Applies `f` to every spectrum of the ensemble, results in index order.
    pub fn map_spectra<T, F>(&self, exec: Execution, f: F) -> Result<Vec<T>, ExperimentError>
    where
        T: Send,
        F: Fn(Spectrum) -> Result<T, ExperimentError> + Sync + Send,
    {
        self.validate()?;
        map_range(exec, 0..self.samples as u64, |i| self.spectrum(i).and_then(&f)).into_iter().collect()
    }
}

/// Binning of the normalized-eigenvalue histogram.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Binning {
    pub lo: f64,
    pub hi: f64,
    pub bins: usize,
}

impl Binning {
    /// 100 bins on [−1.5, 1.5].
    pub const SEMICIRCLE_DEFAULT: Binning = Binning { lo: -1.5, hi: 1.5, bins: 100 };

    pub fn histogram(&self, normalization: Normalization) -> Result<Histogram, ExperimentError> {
        Ok(Histogram::uniform(self.lo, self.hi, self.bins, normalization)?)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityReport {
    pub histogram: Histogram,
    pub eigenvalues: u64,
    pub l1_semicircle: f64,
    pub ks_semicircle: f64,
}

/// Pools λ/(2√n) over the ensemble into a Density-mode histogram and
/// compares it with the semicircle law.
pub fn ensemble_density(cfg: &EnsembleConfig, binning: Binning, exec: Execution) -> Result<DensityReport, ExperimentError> {
    let per_matrix = cfg.map_spectra(exec, |s| Ok(normalized_eigenvalues(&s)))?;
    let mut histogram = binning.histogram(Normalization::Density)?;
    for values in &per_matrix {
        histogram.extend(values.iter().copied());
    }
    let pooled: Vec<f64> = per_matrix.into_iter().flatten().collect();
    let semicircle = ReferenceDensity::Semicircle;
    let ks_semicircle = ks_distance(&pooled, |x| semicircle.cdf(x).unwrap_or(f64::NAN))?;
    Ok(DensityReport {
        l1_semicircle: l1_histogram_distance(&histogram, &semicircle)?,
        histogram,
        eigenvalues: pooled.len() as u64,
        ks_semicircle,
    })
}

/// Pooled bulk spacings (central `window` fraction, unit mean per matrix).
pub fn ensemble_spacings(
    cfg: &EnsembleConfig,
    window: f64,
    binning: Binning,
    exec: Execution,
) -> Result<SpacingReport, ExperimentError> {
    if !(window > 0.0 && window <= 1.0) {
        return Err(ExperimentError::Stats(StatsError::BadWindow(window)));
    }
    let per_matrix = cfg.map_spectra(exec, |s| Ok(bulk_spacings(s.values(), window)?))?;
    let pooled: Vec<f64> = per_matrix.into_iter().flatten().collect();
    Ok(spacing_report(&pooled, binning.histogram(Normalization::Density)?)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MomentRow {
    pub k: u32,
    pub ensemble: f64,
    /// Standard error of the ensemble mean.
    pub std_error: f64,
    pub semicircle: f64,
}

/// Ensemble averages of M_{A,N}(k) for k = 0..=kmax.
pub fn ensemble_moments(cfg: &EnsembleConfig, kmax: u32, exec: Execution) -> Result<Vec<MomentRow>, ExperimentError> {
    let per_matrix = cfg.map_spectra(exec, |s| Ok((0..=kmax).map(|k| empirical_moment(&s, k)).collect::<Vec<_>>()))?;
    let count = per_matrix.len() as f64;
    Ok((0..=kmax)
        .map(|k| {
            let column: Vec<f64> = per_matrix.iter().map(|row| row[k as usize]).collect();
            let mean = pairwise_sum(&column) / count;
            let var = if column.len() > 1 {
                let dev: Vec<f64> = column.iter().map(|x| (x - mean).powi(2)).collect();
                pairwise_sum(&dev) / (count - 1.0)
            } else {
                0.0
            };
            MomentRow { k, ensemble: mean, std_error: (var / count).sqrt(), semicircle: semicircle_moment(k) }
        })
        .collect())
}

/// Sample mean of M_{A,N}(k) over `samples` seeded matrices.
pub fn ensemble_moment(
    n: usize,
    dist: EntryDistribution,
    k: u32,
    samples: usize,
    master_seed: u64,
    exec: Execution,
) -> Result<f64, ExperimentError> {
    let cfg = EnsembleConfig::new(n, samples, dist, master_seed);
    let values = cfg.map_spectra(exec, |s| Ok(empirical_moment(&s, k)))?;
    Ok(pairwise_sum(&values) / values.len() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_samples_rejected() {
        let cfg = EnsembleConfig::new(10, 0, EntryDistribution::StandardGaussian, 0);
        assert!(matches!(
            ensemble_density(&cfg, Binning::SEMICIRCLE_DEFAULT, Execution::Sequential),
            Err(ExperimentError::InvalidConfig(_))
        ));
    }

    #[test]
    fn parallel_matches_sequential() {
        let cfg = EnsembleConfig::new(30, 12, EntryDistribution::UniformSymmetric, 4);
        let a = ensemble_density(&cfg, Binning::SEMICIRCLE_DEFAULT, Execution::Sequential).unwrap();
        let b = ensemble_density(&cfg, Binning::SEMICIRCLE_DEFAULT, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        let a = ensemble_moments(&cfg, 6, Execution::Sequential).unwrap();
        let b = ensemble_moments(&cfg, 6, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a[0].ensemble, 1.0);
    }

    #[test]
    fn bad_window() {
        let cfg = EnsembleConfig::new(30, 2, EntryDistribution::UniformSymmetric, 4);
        let bins = Binning { lo: 0.0, hi: 4.0, bins: 40 };
        assert!(ensemble_spacings(&cfg, 1.5, bins, Execution::Sequential).is_err());
    }
}
