//! Unfolded zero statistics.

use std::f64::consts::{E, PI};

use serde::{Deserialize, Serialize};

use super::{ZeroTable, ZetaError};
use crate::quad::integrate;
use crate::spectral_stats::{
    l1_to_bin_integrals, pair_correlation, spacing_report, Histogram, PairCorrelation, SpacingReport,
};

/// Zeros at or below 2πe are dropped from unfolded statistics.
pub const UNFOLD_THRESHOLD: f64 = 2.0 * PI * E;

/// Minimum number of unfolded zeros for histogram statistics.
const MIN_UNFOLDED: usize = 100;

/// γ ↦ (γ/2π) log(γ/2πe), the smooth part of N(γ) up to a constant, for
/// γ > 2πe. Strictly increasing there, with unit mean spacing.
pub fn unfold(table: &ZeroTable) -> Vec<f64> {
    table
        .ordinates()
        .iter()
        .filter(|&&g| g > UNFOLD_THRESHOLD)
        .map(|&g| g / (2.0 * PI) * (g / (2.0 * PI * E)).ln())
        .collect()
}

fn unfolded_checked(table: &ZeroTable) -> Result<Vec<f64>, ZetaError> {
    let u = unfold(table);
    if u.len() < MIN_UNFOLDED {
        return Err(ZetaError::TooFewZeros { needed: MIN_UNFOLDED, got: u.len() });
    }
    Ok(u)
}

/// Nearest-neighbour spacings of the unfolded zeros against the spacing laws.
pub fn zeta_spacing_histogram(table: &ZeroTable, histogram: Histogram) -> Result<SpacingReport, ZetaError> {
    let u = unfolded_checked(table)?;
    let spacings: Vec<f64> = u.windows(2).map(|w| w[1] - w[0]).collect();
    Ok(spacing_report(&spacings, histogram)?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairCorrelationReport {
    pub correlation: PairCorrelation,
    /// ∫_bin 1 − (sin πx/πx)² per bin.
    pub montgomery: Vec<f64>,
    /// Σ_b |count_b/N − montgomery_b|.
    pub l1_montgomery: f64,
}

/// Per-bin integrals of 1 − (sin πx/πx)².
pub fn montgomery_bin_integrals(edges: &[f64]) -> Vec<f64> {
    let kernel = |x: f64| {
        let y = PI * x;
        if y.abs() < 1e-6 {
            y * y / 3.0
        } else {
            1.0 - (y.sin() / y).powi(2)
        }
    };
    edges.windows(2).map(|w| integrate(kernel, w[0], w[1], 1e-13, 30).value).collect()
}

/// Pair correlation of the unfolded zeros on `bins` equal bins of (0, cutoff].
/// A zero cutoff yields an empty histogram.
pub fn zeta_pair_correlation(table: &ZeroTable, bins: usize, cutoff: f64) -> Result<PairCorrelationReport, ZetaError> {
    let u = unfolded_checked(table)?;
    let edges: Vec<f64> = if cutoff > 0.0 && bins > 0 {
        (0..=bins).map(|i| cutoff * i as f64 / bins as f64).collect()
    } else {
        vec![0.0]
    };
    let correlation = pair_correlation(&u, edges)?;
    let montgomery = montgomery_bin_integrals(correlation.histogram.edges());
    let l1_montgomery = l1_to_bin_integrals(&correlation.values(), &montgomery);
    Ok(PairCorrelationReport { correlation, montgomery, l1_montgomery })
}

#[cfg(test)]
mod tests {
    use super::super::ZeroSource;
    use super::*;
    use crate::spectral_stats::Normalization;

    fn spacing_bins(bins: usize, hi: f64) -> Result<Histogram, ZetaError> {
        Ok(Histogram::uniform(0.0, hi, bins, Normalization::Density)?)
    }

    fn synthetic(count: usize) -> ZeroTable {
        // Points placed exactly at unfolded positions 1, 2, …: the inverse of the unfolding map.
        let ordinates = (1..=count)
            .map(|k| {
                let target = k as f64 + 10.0;
                let mut g = 100.0;
                for _ in 0..60 {
                    let f = g / (2.0 * PI) * (g / (2.0 * PI * E)).ln() - target;
                    let df = (g / (2.0 * PI)).ln() / (2.0 * PI);
                    g -= f / df;
                }
                g
            })
            .collect();
        ZeroTable::new(ordinates, ZeroSource::File, 1e-12).unwrap()
    }

    #[test]
    fn unfold_is_increasing_and_drops_low_zeros() {
        let t = ZeroTable::new(vec![14.134725, 21.02204, 25.010858, 30.424876], ZeroSource::File, 1e-6).unwrap();
        let u = unfold(&t);
        assert_eq!(u.len(), 3);
        assert!(u.windows(2).all(|w| w[1] > w[0]));
        let single = ZeroTable::new(vec![50.0], ZeroSource::File, 1e-6).unwrap();
        assert!(unfold(&single).windows(2).next().is_none());
    }

    #[test]
    fn lattice_spacings_are_one() {
        let t = synthetic(150);
        let u = unfold(&t);
        assert!(u.windows(2).all(|w| (w[1] - w[0] - 1.0).abs() < 1e-9));
        let report = zeta_spacing_histogram(&t, spacing_bins(40, 4.0).unwrap()).unwrap();
        assert_eq!(report.spacings, 149);
    }

    #[test]
    fn too_few_zeros() {
        let t = synthetic(50);
        assert_eq!(
            zeta_spacing_histogram(&t, spacing_bins(10, 4.0).unwrap()).unwrap_err(),
            ZetaError::TooFewZeros { needed: 100, got: 50 }
        );
    }

    #[test]
    fn zero_cutoff_is_empty() {
        let r = zeta_pair_correlation(&synthetic(120), 30, 0.0).unwrap();
        assert_eq!(r.correlation.histogram.bins(), 0);
        assert!(r.montgomery.is_empty());
        assert_eq!(r.l1_montgomery, 0.0);
    }

    #[test]
    fn montgomery_integrals() {
        // ∫₀³ sinc² = Si(6π)/π since sin 3π = 0
        let total: f64 = montgomery_bin_integrals(&(0..=30).map(|i| i as f64 * 0.1).collect::<Vec<_>>()).iter().sum();
        let si_6pi = 1.518_033_961_467_18;
        assert!((total - (3.0 - si_6pi / PI)).abs() < 1e-10);
    }
}
