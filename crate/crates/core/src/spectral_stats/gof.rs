//! Goodness-of-fit distances between samples and reference laws.

use super::{Histogram, Normalization, ReferenceDensity, StatsError};

/// Kolmogorov–Smirnov statistic sup |F_n(x) − F(x)| of `samples` against `cdf`.
pub fn ks_distance<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<f64, StatsError> {
    if samples.is_empty() {
        return Err(StatsError::TooFewValues { needed: 1, got: 0 });
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut d = 0.0_f64;
    for (i, &x) in sorted.iter().enumerate() {
        let f = cdf(x);
        d = d.max(f - i as f64 / n).max((i + 1) as f64 / n - f);
    }
    Ok(d)
}

/// Σ_b |height_b − ref(midpoint_b)| · width_b for a Density-mode histogram.
pub fn l1_histogram_distance(h: &Histogram, reference: &ReferenceDensity) -> Result<f64, StatsError> {
    if h.normalization() != Normalization::Density {
        return Err(StatsError::WrongNormalization { expected: Normalization::Density });
    }
    Ok(h.heights()
        .iter()
        .enumerate()
        .map(|(b, height)| (height - reference.pdf(h.midpoint(b))).abs() * h.width(b))
        .sum())
}

/// Σ_b |value_b − target_b| where the targets are per-bin integrals of a
/// reference (for statistics such as pair correlation whose bin value is
/// already a mass).
pub fn l1_to_bin_integrals(values: &[f64], targets: &[f64]) -> f64 {
    values.iter().zip(targets).map(|(v, t)| (v - t).abs()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ks_at_quantiles() {
        let n = 200;
        let samples: Vec<f64> = (0..n).map(|i| (i as f64 + 0.5) / n as f64).collect();
        let d = ks_distance(&samples, |x| x.clamp(0.0, 1.0)).unwrap();
        assert!((d - 0.5 / n as f64).abs() < 1e-15);
        assert!(ks_distance(&[], |x| x).is_err());
    }

    #[test]
    fn l1_requires_density_mode() {
        let h = Histogram::uniform(0.0, 1.0, 4, Normalization::Counts).unwrap();
        assert!(matches!(
            l1_histogram_distance(&h, &ReferenceDensity::PoissonSpacing),
            Err(StatsError::WrongNormalization { .. })
        ));
    }
}
