use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{ReferenceDensity, StatsError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Normalization {
    Counts,
    Density,
}

/// Binned sample with explicit edges. Bins are left-open, `(edge[b], edge[b+1]]`;
/// values at or below the first edge go to `underflow`, values above the
/// last edge to `overflow`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Histogram {
    edges: Vec<f64>,
    counts: Vec<u64>,
    underflow: u64,
    overflow: u64,
    normalization: Normalization,
}

impl Histogram {
    pub fn with_edges(edges: Vec<f64>, normalization: Normalization) -> Result<Self, StatsError> {
        if edges.is_empty() || edges.iter().any(|e| !e.is_finite()) || edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(StatsError::BadEdges);
        }
        let bins = edges.len() - 1;
        Ok(Histogram { edges, counts: vec![0; bins], underflow: 0, overflow: 0, normalization })
    }

    /// `bins` equal-width bins over `(lo, hi]`.
    pub fn uniform(lo: f64, hi: f64, bins: usize, normalization: Normalization) -> Result<Self, StatsError> {
        if bins == 0 || !(lo < hi) {
            return Err(StatsError::BadEdges);
        }
        let width = (hi - lo) / bins as f64;
        let mut edges: Vec<f64> = (0..bins).map(|b| lo + b as f64 * width).collect();
        edges.push(hi);
        Self::with_edges(edges, normalization)
    }

    pub fn edges(&self) -> &[f64] {
        &self.edges
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn underflow(&self) -> u64 {
        self.underflow
    }

    pub fn overflow(&self) -> u64 {
        self.overflow
    }

    pub fn normalization(&self) -> Normalization {
        self.normalization
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn in_range(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn total(&self) -> u64 {
        self.in_range() + self.underflow + self.overflow
    }

    pub fn width(&self, b: usize) -> f64 {
        self.edges[b + 1] - self.edges[b]
    }

    pub fn midpoint(&self, b: usize) -> f64 {
        0.5 * (self.edges[b] + self.edges[b + 1])
    }

    /// Index of the bin holding `x`, or `None` for under/overflow.
    pub fn locate(&self, x: f64) -> Option<usize> {
        let idx = self.edges.partition_point(|e| *e < x);
        if idx == 0 || idx == self.edges.len() {
            None
        } else {
            Some(idx - 1)
        }
    }

    pub fn fill(&mut self, x: f64) {
        let idx = self.edges.partition_point(|e| *e < x);
        if idx == 0 {
            self.underflow += 1;
        } else if idx == self.edges.len() || x.is_nan() {
            self.overflow += 1;
        } else {
            self.counts[idx - 1] += 1;
        }
    }

    pub fn extend<I: IntoIterator<Item = f64>>(&mut self, values: I) {
        values.into_iter().for_each(|x| self.fill(x));
    }

    /// Adds another histogram with identical binning. Integer counts make
    /// merging associative and commutative.
    pub fn merge(&mut self, other: &Histogram) -> Result<(), StatsError> {
        if self.edges != other.edges {
            return Err(StatsError::IncompatibleBins);
        }
        for (a, b) in self.counts.iter_mut().zip(&other.counts) {
            *a += b;
        }
        self.underflow += other.underflow;
        self.overflow += other.overflow;
        Ok(())
    }

    pub fn with_normalization(mut self, normalization: Normalization) -> Self {
        self.normalization = normalization;
        self
    }

    /// Per-bin density `count / (total · width)`, independent of the mode.
    pub fn densities(&self) -> Vec<f64> {
        let total = self.total() as f64;
        (0..self.bins())
            .map(|b| if total > 0.0 { self.counts[b] as f64 / (total * self.width(b)) } else { 0.0 })
            .collect()
    }

    /// Bar heights in the histogram's own mode.
    pub fn heights(&self) -> Vec<f64> {
        match self.normalization {
            Normalization::Counts => self.counts.iter().map(|&c| c as f64).collect(),
            Normalization::Density => self.densities(),
        }
    }

    /// Σ height·width over in-range bins; the in-range fraction in Density mode.
    pub fn mass(&self) -> f64 {
        self.heights().iter().enumerate().map(|(b, h)| h * self.width(b)).sum()
    }

    /// Empirical probability of each bin, `count / total`.
    pub fn frequencies(&self) -> Vec<f64> {
        let total = self.total() as f64;
        self.counts.iter().map(|&c| if total > 0.0 { c as f64 / total } else { 0.0 }).collect()
    }

    /// CSV rendering: `bin_left,bin_right,count,density,reference_density`
    /// followed by `#underflow=` and `#overflow=` lines. The first reference
    /// fills `reference_density`; further references add
    /// `reference_density_<name>` columns.
    pub fn to_csv(&self, references: &[(&str, ReferenceDensity)]) -> String {
        self.to_csv_with(&self.densities(), |b| {
            references.iter().map(|(_, r)| r.pdf(self.midpoint(b))).collect()
        }, &references.iter().map(|(name, _)| *name).collect::<Vec<_>>())
    }

    /// CSV rendering with caller-supplied density and reference columns.
    pub fn to_csv_with<F>(&self, densities: &[f64], reference_row: F, reference_names: &[&str]) -> String
    where
        F: Fn(usize) -> Vec<f64>,
    {
        let mut out = String::from("bin_left,bin_right,count,density");
        for (i, name) in reference_names.iter().enumerate() {
            if i == 0 {
                out.push_str(",reference_density");
            } else {
                let _ = write!(out, ",reference_density_{name}");
            }
        }
        out.push('\n');
        for b in 0..self.bins() {
            let _ = write!(
                out,
                "{},{},{},{}",
                fmt17(self.edges[b]),
                fmt17(self.edges[b + 1]),
                self.counts[b],
                fmt17(densities[b])
            );
            let refs = reference_row(b);
            for r in refs.iter().take(reference_names.len()) {
                let _ = write!(out, ",{}", fmt17(*r));
            }
            out.push('\n');
        }
        let _ = writeln!(out, "#underflow={}", self.underflow);
        let _ = writeln!(out, "#overflow={}", self.overflow);
        out
    }
}

/// Decimal with 17 significant digits.
pub(crate) fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
