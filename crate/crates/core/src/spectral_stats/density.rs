//! Reference laws the empirical statistics are compared against.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};
use statrs::function::erf::erf;
use statrs::function::gamma::gamma;

use super::StatsError;

/// Validated Weibull shape `k` and scale `lambda`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Weibull {
    k: f64,
    lambda: f64,
}

impl Weibull {
    pub fn new(k: f64, lambda: f64) -> Result<Self, StatsError> {
        if k > 0.0 && lambda > 0.0 && k.is_finite() && lambda.is_finite() {
            Ok(Weibull { k, lambda })
        } else {
            Err(StatsError::InvalidWeibull { k, lambda })
        }
    }

    pub fn shape(&self) -> f64 {
        self.k
    }

    pub fn scale(&self) -> f64 {
        self.lambda
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ReferenceDensity {
    /// (2/π)√(1−x²) on [−1, 1].
    Semicircle,
    /// Wigner surmise (π/2)x·exp(−πx²/4).
    WignerGoe,
    /// Unit-area, unit-mean GUE surmise (32/π²)x²·exp(−4x²/π).
    WignerGue,
    /// exp(−x).
    PoissonSpacing,
    Weibull(Weibull),
    /// Probability of `j` points in an interval of length x: xʲe⁻ˣ/j!.
    PoissonCount(u32),
    /// 1 − (sin πx / πx)²; a correlation kernel rather than a density.
    MontgomeryPairCorrelation,
}

impl ReferenceDensity {
    pub fn weibull(k: f64, lambda: f64) -> Result<Self, StatsError> {
        Weibull::new(k, lambda).map(ReferenceDensity::Weibull)
    }

    pub fn name(&self) -> &'static str {
        match self {
            ReferenceDensity::Semicircle => "semicircle",
            ReferenceDensity::WignerGoe => "wigner_goe",
            ReferenceDensity::WignerGue => "wigner_gue",
            ReferenceDensity::PoissonSpacing => "poisson_spacing",
            ReferenceDensity::Weibull(_) => "weibull",
            ReferenceDensity::PoissonCount(_) => "poisson_count",
            ReferenceDensity::MontgomeryPairCorrelation => "montgomery",
        }
    }

    /// Whether this is a probability density (integrates to one).
    pub fn is_probability_density(&self) -> bool {
        !matches!(self, ReferenceDensity::MontgomeryPairCorrelation)
    }

    /// Support as a closed interval (possibly infinite on the right).
    pub fn support(&self) -> (f64, f64) {
        match self {
            ReferenceDensity::Semicircle => (-1.0, 1.0),
            ReferenceDensity::MontgomeryPairCorrelation => (f64::NEG_INFINITY, f64::INFINITY),
            _ => (0.0, f64::INFINITY),
        }
    }

    pub fn pdf(&self, x: f64) -> f64 {
        match *self {
            ReferenceDensity::Semicircle => {
                if x.abs() <= 1.0 {
                    2.0 / PI * (1.0 - x * x).sqrt()
                } else {
                    0.0
                }
            }
            ReferenceDensity::WignerGoe => {
                if x < 0.0 {
                    0.0
                } else {
                    0.5 * PI * x * (-0.25 * PI * x * x).exp()
                }
            }
            ReferenceDensity::WignerGue => {
                if x < 0.0 {
                    0.0
                } else {
                    32.0 / (PI * PI) * x * x * (-4.0 * x * x / PI).exp()
                }
            }
            ReferenceDensity::PoissonSpacing => {
                if x < 0.0 {
                    0.0
                } else {
                    (-x).exp()
                }
            }
            ReferenceDensity::Weibull(Weibull { k, lambda }) => {
                if x < 0.0 {
                    0.0
                } else {
                    let z = x / lambda;
                    k / lambda * z.powf(k - 1.0) * (-z.powf(k)).exp()
                }
            }
            ReferenceDensity::PoissonCount(j) => {
                if x < 0.0 {
                    0.0
                } else {
                    poisson_pmf(j, x)
                }
            }
            ReferenceDensity::MontgomeryPairCorrelation => {
                let s = sinc_pi(x);
                1.0 - s * s
            }
        }
    }

    /// Cumulative distribution function; not defined for the Montgomery kernel.
    pub fn cdf(&self, x: f64) -> Result<f64, StatsError> {
        let (lo, _) = self.support();
        if x <= lo {
            return if matches!(self, ReferenceDensity::MontgomeryPairCorrelation) {
                Err(StatsError::NoCdf("montgomery pair correlation"))
            } else {
                Ok(0.0)
            };
        }
        Ok(match *self {
            ReferenceDensity::Semicircle => {
                if x >= 1.0 {
                    1.0
                } else {
                    0.5 + (x * (1.0 - x * x).sqrt() + x.asin()) / PI
                }
            }
            ReferenceDensity::WignerGoe => -(-0.25 * PI * x * x).exp_m1(),
            ReferenceDensity::WignerGue => {
                erf(2.0 * x / PI.sqrt()) - 4.0 * x / PI * (-4.0 * x * x / PI).exp()
            }
            ReferenceDensity::PoissonSpacing => -(-x).exp_m1(),
            ReferenceDensity::Weibull(Weibull { k, lambda }) => -(-(x / lambda).powf(k)).exp_m1(),
            ReferenceDensity::PoissonCount(j) => {
                // Regularized lower incomplete gamma P(j+1, x).
                1.0 - (0..=j).map(|i| poisson_pmf(i, x)).sum::<f64>()
            }
            ReferenceDensity::MontgomeryPairCorrelation => {
                return Err(StatsError::NoCdf("montgomery pair correlation"))
            }
        })
    }
}

/// sin(πx)/(πx) with the removable singularity filled in.
pub(crate) fn sinc_pi(x: f64) -> f64 {
    let y = PI * x;
    if y.abs() < 1e-8 {
        1.0 - y * y / 6.0
    } else {
        y.sin() / y
    }
}

fn poisson_pmf(j: u32, x: f64) -> f64 {
    if x == 0.0 {
        return if j == 0 { 1.0 } else { 0.0 };
    }
    let log_fact: f64 = (1..=j).map(|i| (i as f64).ln()).sum();
    (j as f64 * x.ln() - x - log_fact).exp()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WeibullStats {
    pub mean: f64,
    pub median: f64,
    /// Zero (boundary mode) when k ≤ 1.
    pub mode: f64,
}

pub fn weibull_stats(k: f64, lambda: f64) -> Result<WeibullStats, StatsError> {
    let w = Weibull::new(k, lambda)?;
    let (k, lambda) = (w.k, w.lambda);
    Ok(WeibullStats {
        mean: lambda * gamma(1.0 + 1.0 / k),
        median: lambda * LN_2.powf(1.0 / k),
        mode: if k > 1.0 { lambda * ((k - 1.0) / k).powf(1.0 / k) } else { 0.0 },
    })
}

/// k-th moment of the semicircle law: 0 for odd k, C_{k/2}/4^{k/2} for even k.
pub fn semicircle_moment(k: u32) -> f64 {
    if k % 2 == 1 {
        return 0.0;
    }
    let m = k / 2;
    // C_m / 4^m = ∏_{i=1}^{m} (m+i)/(4i) / (m+1)
    let mut value = 1.0;
    for i in 1..=m {
        value *= (m + i) as f64 / (4.0 * i as f64);
    }
    value / (m + 1) as f64
}
