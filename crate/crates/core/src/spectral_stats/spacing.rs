//! Normalized eigenvalues, bulk spacings, interval counts and pair correlation.

use serde::{Deserialize, Serialize};

use super::{ks_distance, l1_histogram_distance, Histogram, Normalization, ReferenceDensity, StatsError};
use crate::eigen::Spectrum;

/// λᵢ / (2√n), order preserved: the atoms of the empirical spectral measure.
pub fn normalized_eigenvalues(spectrum: &Spectrum) -> Vec<f64> {
    let scale = 2.0 * (spectrum.n() as f64).sqrt();
    spectrum.values().iter().map(|x| x / scale).collect()
}

fn check_sorted(values: &[f64]) -> Result<(), StatsError> {
    if values.iter().any(|x| !x.is_finite()) || values.windows(2).any(|w| w[0] > w[1]) {
        return Err(StatsError::Unsorted);
    }
    Ok(())
}

/// Consecutive differences of the central `window_fraction` of `values`
/// (by index), rescaled to mean one.
pub fn bulk_spacings(values: &[f64], window_fraction: f64) -> Result<Vec<f64>, StatsError> {
    if !(window_fraction > 0.0 && window_fraction <= 1.0) {
        return Err(StatsError::BadWindow(window_fraction));
    }
    check_sorted(values)?;
    let n = values.len();
    let keep = ((window_fraction * n as f64).round() as usize).min(n);
    if keep < 3 {
        return Err(StatsError::TooFewValues { needed: 3, got: keep });
    }
    let start = (n - keep) / 2;
    let window = &values[start..start + keep];
    let raw: Vec<f64> = window.windows(2).map(|w| w[1] - w[0]).collect();
    let mean = raw.iter().sum::<f64>() / raw.len() as f64;
    if mean <= 0.0 {
        return Err(StatsError::Unsorted);
    }
    Ok(raw.into_iter().map(|s| s / mean).collect())
}

/// Histogram (Counts mode) of the number of points in disjoint windows
/// `[x₀ + kL, x₀ + (k+1)L)` tiling the sample from its first point. Bin `j`
/// is `(j − ½, j + ½]`.
pub fn interval_counts(values: &[f64], length: f64) -> Result<Histogram, StatsError> {
    if !(length > 0.0) || !length.is_finite() {
        return Err(StatsError::BadLength(length));
    }
    if values.is_empty() {
        return Err(StatsError::TooFewValues { needed: 1, got: 0 });
    }
    check_sorted(values)?;
    let start = values[0];
    let end = values[values.len() - 1];
    let windows = (((end - start) / length).floor() as usize).max(1);
    let mut per_window = vec![0u64; windows];
    for &x in values {
        let k = ((x - start) / length).floor() as usize;
        if k < windows {
            per_window[k] += 1;
        }
    }
    let max = per_window.iter().copied().max().unwrap_or(0);
    let edges: Vec<f64> = (0..=max + 1).map(|j| j as f64 - 0.5).collect();
    let mut hist = Histogram::with_edges(edges, Normalization::Counts)?;
    hist.extend(per_window.into_iter().map(|c| c as f64));
    Ok(hist)
}

/// Pair-correlation counts: for each bin `I`, the number of ordered pairs
/// `(i, j)` with `x_j − x_i ∈ I`, divided by the number of points.
///
/// Bins are expected on the positive axis; each unordered pair is counted
/// once through its positive difference, and the symmetric negative side is
/// implied.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairCorrelation {
    pub histogram: Histogram,
    pub points: usize,
}

impl PairCorrelation {
    /// count / N per bin.
    pub fn values(&self) -> Vec<f64> {
        let n = self.points as f64;
        self.histogram.counts().iter().map(|&c| if n > 0.0 { c as f64 / n } else { 0.0 }).collect()
    }

    /// count / (N · width): comparable with the pointwise kernel.
    pub fn densities(&self) -> Vec<f64> {
        self.values()
            .iter()
            .enumerate()
            .map(|(b, v)| v / self.histogram.width(b))
            .collect()
    }

    pub fn total(&self) -> f64 {
        self.values().iter().sum()
    }

    pub fn note(&self) -> &'static str {
        "positive differences only; the full two-sided count is twice these values"
    }
}

pub fn pair_correlation(values: &[f64], edges: Vec<f64>) -> Result<PairCorrelation, StatsError> {
    let mut sorted = values.to_vec();
    if sorted.iter().any(|x| !x.is_finite()) {
        return Err(StatsError::Unsorted);
    }
    sorted.sort_by(f64::total_cmp);
    let mut histogram = Histogram::with_edges(edges, Normalization::Counts)?;
    let hi = histogram.edges()[histogram.edges().len() - 1];
    if histogram.bins() > 0 {
        for (i, &x) in sorted.iter().enumerate() {
            for &y in &sorted[i + 1..] {
                let d = y - x;
                if d > hi {
                    break;
                }
                if d > 0.0 {
                    histogram.fill(d);
                }
            }
        }
    }
    Ok(PairCorrelation { histogram, points: sorted.len() })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Distances {
    pub wigner_goe: f64,
    pub wigner_gue: f64,
    pub poisson: f64,
}

impl Distances {
    fn compute<F: Fn(&ReferenceDensity) -> Result<f64, StatsError>>(f: F) -> Result<Self, StatsError> {
        Ok(Distances {
            wigner_goe: f(&ReferenceDensity::WignerGoe)?,
            wigner_gue: f(&ReferenceDensity::WignerGue)?,
            poisson: f(&ReferenceDensity::PoissonSpacing)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpacingReport {
    pub histogram: Histogram,
    pub spacings: u64,
    pub ks: Distances,
    pub l1: Distances,
}

/// Reference laws reported for spacing histograms, in CSV column order.
pub const SPACING_REFERENCES: [(&str, ReferenceDensity); 3] = [
    ("goe", ReferenceDensity::WignerGoe),
    ("gue", ReferenceDensity::WignerGue),
    ("poisson", ReferenceDensity::PoissonSpacing),
];

/// Spacing statistics of a unit-mean sample, filled into `histogram`
/// (which must be in Density mode).
pub fn spacing_report(spacings: &[f64], mut histogram: Histogram) -> Result<SpacingReport, StatsError> {
    if histogram.normalization() != Normalization::Density {
        return Err(StatsError::WrongNormalization { expected: Normalization::Density });
    }
    histogram.extend(spacings.iter().copied());
    let ks = Distances::compute(|r| ks_distance(spacings, |x| r.cdf(x).unwrap_or(f64::NAN)))?;
    let l1 = Distances::compute(|r| l1_histogram_distance(&histogram, r))?;
    Ok(SpacingReport { histogram, spacings: spacings.len() as u64, ks, l1 })
}
