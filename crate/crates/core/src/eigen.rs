//! Eigenvalues of real symmetric matrices and the trace identities that tie
//! them back to the matrix entries.
//!
//! The solver is Householder reduction to tridiagonal form followed by the
//! implicit-shift QL iteration, eigenvalues only. [`trace_power`] never
//! touches this code path: it multiplies dense matrices, so it can serve as
//! an independent check on the spectrum.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ensembles::SymmetricMatrix;

#[derive(Debug, Error, PartialEq)]
pub enum EigenError {
    #[error("matrix contains non-finite entries")]
    NonFiniteInput,
    #[error("implicit QL did not converge for n = {n} after {sweeps} sweeps")]
    NoConvergence { n: usize, sweeps: usize },
    #[error("trace power requires k >= 1, got {0}")]
    InvalidPower(u32),
    #[error("trace of A^{k} overflowed to a non-finite value")]
    Overflow { k: u32 },
}

/// Sweeps allowed per unit of dimension before giving up.
pub const SWEEPS_PER_DIMENSION: usize = 30;

/// Sorted eigenvalues of one n×n matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    n: usize,
    values: Vec<f64>,
}

impl Spectrum {
    /// Wraps externally supplied eigenvalues, sorting them ascending.
    pub fn from_values(mut values: Vec<f64>) -> Self {
        values.sort_by(f64::total_cmp);
        Spectrum { n: values.len(), values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Σ λᵢᵏ.
    pub fn power_sum(&self, k: u32) -> f64 {
        self.values.iter().map(|x| x.powi(k as i32)).sum()
    }
}

/// All eigenvalues of `a`, ascending.
pub fn eigenvalues(a: &SymmetricMatrix) -> Result<Spectrum, EigenError> {
    if !a.is_finite() {
        return Err(EigenError::NonFiniteInput);
    }
    let n = a.n();
    let mut dense = a.to_dense();
    let (mut diag, mut off) = tridiagonalize(&mut dense, n);
    tridiagonal_ql(&mut diag, &mut off)?;
    diag.sort_by(f64::total_cmp);
    Ok(Spectrum { n, values: diag })
}

/// Householder reduction of a dense symmetric row-major matrix. Returns the
/// diagonal and the n−1 sub-diagonal entries; `a` is used as workspace.
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n.saturating_sub(1)];
    let mut v = vec![0.0; n];
    let mut p = vec![0.0; n];

    for k in 0..n.saturating_sub(2) {
        diag[k] = a[k * n + k];
        let m = n - k - 1;
        let x = &a[k * n + k + 1..(k + 1) * n];
        let scale = x.iter().fold(0.0_f64, |s, xi| s.max(xi.abs()));
        if scale == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let norm = scale * x.iter().map(|xi| (xi / scale).powi(2)).sum::<f64>().sqrt();
        let alpha = if x[0] > 0.0 { -norm } else { norm };
        let v = &mut v[..m];
        v.copy_from_slice(x);
        v[0] -= alpha;
        let tau = 2.0 / v.iter().map(|vi| vi * vi).sum::<f64>();
        off[k] = alpha;

        // p = τ B v over the trailing block B = a[k+1.., k+1..].
        let p = &mut p[..m];
        for (i, pi) in p.iter_mut().enumerate() {
            let row = &a[(k + 1 + i) * n + k + 1..(k + 2 + i) * n];
            *pi = tau * row.iter().zip(v.iter()).map(|(b, vj)| b * vj).sum::<f64>();
        }
        let half_k = 0.5 * tau * v.iter().zip(p.iter()).map(|(vi, pi)| vi * pi).sum::<f64>();
        // p becomes w = p − K v; then B ← B − v wᵀ − w vᵀ.
        for (pi, vi) in p.iter_mut().zip(v.iter()) {
            *pi -= half_k * vi;
        }
        for i in 0..m {
            let (vi, wi) = (v[i], p[i]);
            let row = &mut a[(k + 1 + i) * n + k + 1..(k + 2 + i) * n];
            for ((b, vj), wj) in row.iter_mut().zip(v.iter()).zip(p.iter()) {
                *b -= vi * wj + wi * vj;
            }
        }
    }
    if n >= 2 {
        diag[n - 2] = a[(n - 2) * n + n - 2];
        off[n - 2] = a[(n - 2) * n + n - 1];
    }
    diag[n - 1] = a[n * n - 1];
    (diag, off)
}

/// Implicit-shift QL on a symmetric tridiagonal matrix; eigenvalues are
/// left (unsorted) in `diag`.
fn tridiagonal_ql(diag: &mut [f64], off: &[f64]) -> Result<(), EigenError> {
    let n = diag.len();
    let mut e = vec![0.0; n];
    e[..off.len()].copy_from_slice(off);
    let cap = SWEEPS_PER_DIMENSION * n;
    let mut sweeps = 0usize;

    for l in 0..n {
        loop {
            let mut m = l;
            while m + 1 < n {
                if e[m].abs() <= f64::EPSILON * (diag[m].abs() + diag[m + 1].abs()) {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            sweeps += 1;
            if sweeps > cap {
                return Err(EigenError::NoConvergence { n, sweeps: cap });
            }

            let mut g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0_f64, 1.0_f64, 0.0_f64);
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            diag[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Trace of Aᵏ by explicit dense matrix products (k ≥ 1).
pub fn trace_power(a: &SymmetricMatrix, k: u32) -> Result<f64, EigenError> {
    if k == 0 {
        return Err(EigenError::InvalidPower(k));
    }
    if k == 1 {
        return finite(a.trace(), k);
    }
    let n = a.n();
    let dense = a.to_dense();
    let mut power = dense.clone();
    let mut next = vec![0.0; n * n];
    for _ in 2..k {
        next.iter_mut().for_each(|x| *x = 0.0);
        for i in 0..n {
            for l in 0..n {
                let pil = power[i * n + l];
                let row = &dense[l * n..(l + 1) * n];
                for (out, alj) in next[i * n..(i + 1) * n].iter_mut().zip(row) {
                    *out += pil * alj;
                }
            }
        }
        std::mem::swap(&mut power, &mut next);
    }
    // trace(P A) = Σ_ij P_ij A_ji
    let mut trace = 0.0;
    for i in 0..n {
        for j in 0..n {
            trace += power[i * n + j] * dense[j * n + i];
        }
    }
    finite(trace, k)
}

fn finite(x: f64, k: u32) -> Result<f64, EigenError> {
    if x.is_finite() {
        Ok(x)
    } else {
        Err(EigenError::Overflow { k })
    }
}

/// Normalized k-th moment Σλᵢᵏ / (2ᵏ n^{k/2+1}) of the empirical measure of
/// the eigenvalues scaled by 2√n.
pub fn empirical_moment(spectrum: &Spectrum, k: u32) -> f64 {
    spectrum.power_sum(k) / moment_denominator(spectrum.n(), k)
}

/// The same normalized moment computed from the matrix entries through
/// trace(Aᵏ).
pub fn trace_moment(a: &SymmetricMatrix, k: u32) -> Result<f64, EigenError> {
    if k == 0 {
        return Ok(1.0);
    }
    Ok(trace_power(a, k)? / moment_denominator(a.n(), k))
}

fn moment_denominator(n: usize, k: u32) -> f64 {
    let n = n as f64;
    2f64.powi(k as i32) * n.powf(k as f64 / 2.0 + 1.0)
}
