//! Even test functions given as explicit Fourier pairs with compactly
//! supported transforms.
//!
//! Two conventions are in use:
//!
//! * `TwoPi`: φ̂(ξ) = ∫ φ(x) e^{−2πixξ} dx. The Fejér pair is
//!   φ̂(ξ) = max(0, 1 − |ξ|/σ), φ(x) = σ (sin πσx / πσx)².
//! * `PlainExp`: φ(r) = ∫ g(u) e^{iru} du with g supported in [−σ, σ]. The
//!   Fejér pair is g(u) = (1/2π) max(0, 1 − |u|/σ),
//!   φ(r) = (σ/2π) (sin(σr/2) / (σr/2))².
//!
//! The two are related exactly by g = φ̂/2π and φ_plain(r) = φ_twopi(r/2π)/2π.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Convention {
    TwoPi,
    PlainExp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Fejer,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TestFunction {
    pub family: Family,
    pub convention: Convention,
    /// Half-width of the support of the transform side (φ̂ or g).
    pub sigma: f64,
}

/// Fejér kernel φ(x) = σ (sin πσx / πσx)², with φ(0) = σ.
pub fn fejer_phi(sigma: f64, x: f64) -> f64 {
    let y = PI * sigma * x;
    if y.abs() < 1e-8 {
        sigma * (1.0 - y * y / 3.0)
    } else {
        let s = y.sin() / y;
        sigma * s * s
    }
}

/// Triangle φ̂(ξ) = max(0, 1 − |ξ|/σ).
pub fn fejer_phi_hat(sigma: f64, xi: f64) -> f64 {
    (1.0 - xi.abs() / sigma).max(0.0)
}

impl TestFunction {
    pub fn fejer(sigma: f64, convention: Convention) -> Self {
        assert!(sigma > 0.0 && sigma.is_finite(), "Fejér support must be positive, got {sigma}");
        TestFunction { family: Family::Fejer, convention, sigma }
    }

    /// The space-side function: φ(x) (TwoPi) or φ(r) (PlainExp).
    pub fn phi(&self, x: f64) -> f64 {
        match self.convention {
            Convention::TwoPi => fejer_phi(self.sigma, x),
            Convention::PlainExp => fejer_phi(self.sigma, x / (2.0 * PI)) / (2.0 * PI),
        }
    }

    /// The transform side: φ̂(ξ) (TwoPi) or g(u) (PlainExp).
    pub fn transform(&self, u: f64) -> f64 {
        match self.convention {
            Convention::TwoPi => fejer_phi_hat(self.sigma, u),
            Convention::PlainExp => fejer_phi_hat(self.sigma, u) / (2.0 * PI),
        }
    }

    /// ∫ φ over the real line, known in closed form from the transform at 0.
    pub fn integral_phi(&self) -> f64 {
        match self.convention {
            Convention::TwoPi => self.transform(0.0),
            Convention::PlainExp => 2.0 * PI * self.transform(0.0),
        }
    }

    /// Half-width of the transform's support.
    pub fn support(&self) -> f64 {
        self.sigma
    }

    /// Upper bound on |φ| at distance |x| from the origin.
    pub fn phi_decay_bound(&self, x: f64) -> f64 {
        let x = x.abs();
        let peak = self.phi(0.0);
        let tail = match self.convention {
            // σ/(πσx)²
            Convention::TwoPi => 1.0 / (PI * PI * self.sigma * x * x),
            // (σ/2π)·4/(σx)²
            Convention::PlainExp => 2.0 / (PI * self.sigma * x * x),
        };
        if x == 0.0 {
            peak
        } else {
            peak.min(tail)
        }
    }

    /// Positive zeros of φ are at multiples of this spacing.
    pub fn phi_zero_spacing(&self) -> f64 {
        match self.convention {
            Convention::TwoPi => 1.0 / self.sigma,
            Convention::PlainExp => 2.0 * PI / self.sigma,
        }
    }

    /// Same function expressed in the other convention.
    pub fn to_convention(&self, convention: Convention) -> Self {
        TestFunction { convention, ..*self }
    }
}
