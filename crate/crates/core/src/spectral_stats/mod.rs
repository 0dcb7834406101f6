//! Statistics shared by matrix spectra and zeta zeros: binned empirical
//! densities, reference laws, spacings, interval counts, pair correlation
//! and goodness-of-fit distances.

mod density;
mod gof;
mod histogram;
mod spacing;

pub use density::{semicircle_moment, weibull_stats, ReferenceDensity, Weibull, WeibullStats};
pub use gof::{ks_distance, l1_histogram_distance, l1_to_bin_integrals};
pub use histogram::{Histogram, Normalization};
pub use spacing::{
    bulk_spacings, interval_counts, normalized_eigenvalues, pair_correlation, spacing_report, Distances, PairCorrelation,
    SpacingReport, SPACING_REFERENCES,
};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum StatsError {
    #[error("histogram edges must be finite and strictly ascending")]
    BadEdges,
    #[error("histograms have different binning and cannot be merged")]
    IncompatibleBins,
    #[error("operation needs a histogram in {expected:?} mode")]
    WrongNormalization { expected: Normalization },
    #[error("Weibull parameters must be positive (k = {k}, lambda = {lambda})")]
    InvalidWeibull { k: f64, lambda: f64 },
    #[error("need at least {needed} values, got {got}")]
    TooFewValues { needed: usize, got: usize },
    #[error("window fraction {0} outside (0, 1]")]
    BadWindow(f64),
    #[error("interval length must be positive, got {0}")]
    BadLength(f64),
    #[error("{0} has no cumulative distribution function")]
    NoCdf(&'static str),
    #[error("values must be finite and sorted ascending")]
    Unsorted,
}
