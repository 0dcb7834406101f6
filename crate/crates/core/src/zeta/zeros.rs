//! Zeros of Z(t) on (0, T] by sign changes between good Gram points.
//!
//! Gram point g_n solves θ(g_n) = nπ. It is good when (−1)ⁿ Z(g_n) > 0. Since
//! Z(t) < 0 on (0, γ₁), sign Z(t) = −(−1)^{N(t)}, so at a good Gram point S(g_n)
//! is even. With |S(t)| < 2 on the working range this forces N(g_n) = n + 1.
//! Between consecutive good Gram points g_a < g_b there are therefore exactly
//! b − a zeros, and finding b − a sign changes certifies all of them simple
//! and accounted for.

use serde::{Deserialize, Serialize};

use super::riemann::ZetaEvaluator;
use super::special::{theta, theta_prime};
use super::{ZeroSource, ZeroTable, ZetaError};
use crate::par::{map_slice, Execution};
use std::f64::consts::PI;

/// Upper limit on the height accepted by [`compute_zeros`].
pub const MAX_HEIGHT: f64 = 1e4;

/// Extra Gram intervals searched past `t_max` for a closing good Gram point.
const CLOSING_SEARCH: i64 = 200;
const INITIAL_SAMPLES: usize = 4;
const MAX_SAMPLES: usize = 512;
/// Bracket width at which root refinement stops.
const ROOT_TOLERANCE: f64 = 1e-11;
const PRECISION_HINT: f64 = 1e-9;

/// The Gram point g_n, n ≥ −1, on the increasing branch of θ.
pub fn gram_point(n: i64) -> Result<f64, ZetaError> {
    let target = n as f64 * PI;
    // θ is convex and increasing past t ≈ 6.3, so Newton from the right descends monotonically.
    let mut t = 20.0;
    while theta(t) < target {
        t *= 2.0;
    }
    for _ in 0..100 {
        let step = (theta(t) - target) / theta_prime(t);
        t -= step;
        if step.abs() <= 1e-13 * t {
            return Ok(t);
        }
    }
    Err(ZetaError::GramSearch(n))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum AuditStatus {
    Pass,
    Fail,
}

/// Count check at a good Gram point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuditCheckpoint {
    pub gram_index: i64,
    pub t: f64,
    pub z: f64,
    /// round(θ(t)/π + 1)
    pub expected: u64,
    pub found: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroAudit {
    pub status: AuditStatus,
    pub t_max: f64,
    pub zeros: u64,
    pub checkpoints: Vec<AuditCheckpoint>,
    /// Intervals whose sign-change count disagreed with the Gram count.
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComputedZeros {
    pub table: ZeroTable,
    pub audit: ZeroAudit,
}

struct Block {
    a: i64,
    b: i64,
    lo: f64,
    hi: f64,
}

struct BlockResult {
    zeros: Vec<f64>,
    failure: Option<String>,
}

/// All zeros of ζ(½ + it) with 0 < t ≤ `t_max`, each to within 10⁻⁹.
///
/// Intervals between good Gram points are scanned concurrently; a serial
/// pass then rechecks the cumulative count at every good Gram point.
pub fn compute_zeros(t_max: f64, exec: Execution) -> Result<ComputedZeros, ZetaError> {
    if !(t_max > 0.0 && t_max <= MAX_HEIGHT) {
        return Err(ZetaError::BadHeight(t_max));
    }
    let gram_last = (theta(t_max) / PI).ceil() as i64 + 1;
    let indices: Vec<i64> = (-1..=gram_last + CLOSING_SEARCH).collect();
    let points = indices.iter().map(|&n| gram_point(n)).collect::<Result<Vec<_>, _>>()?;
    let evaluator = ZetaEvaluator::new(points[points.len() - 1] + 1.0);
    let z_values = map_slice(exec, &points, |&t| evaluator.hardy_z(t));

    let good: Vec<usize> = (0..indices.len())
        .filter(|&i| {
            let sign = if indices[i].rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            sign * z_values[i] > 0.0
        })
        .collect();
    let mut failures = Vec::new();
    if good.first() != Some(&0) {
        failures.push(format!("Gram point g_-1 = {} is not good", points[0]));
    }
    let closing = good.iter().position(|&i| points[i] > t_max);
    let Some(closing) = closing else {
        return Err(ZetaError::GramSearch(gram_last + CLOSING_SEARCH));
    };
    let blocks: Vec<Block> = good[..=closing]
        .windows(2)
        .map(|w| Block { a: indices[w[0]], b: indices[w[1]], lo: points[w[0]], hi: points[w[1]] })
        .collect();

    let results = map_slice(exec, &blocks, |blk| scan_block(&evaluator, blk, &points, &indices, &z_values));
    let mut ordinates = Vec::new();
    for r in results {
        ordinates.extend(r.zeros);
        failures.extend(r.failure);
    }

    let checkpoints = audit(&ordinates, &good[..=closing], &indices, &points, &z_values);
    for c in &checkpoints {
        if c.expected != c.found {
            failures.push(format!("count at g_{} = {}: expected {}, found {}", c.gram_index, c.t, c.expected, c.found));
        }
    }
    if ordinates.windows(2).any(|w| w[0] >= w[1]) {
        failures.push("ordinates not strictly ascending".into());
    }

    ordinates.retain(|&g| g <= t_max);
    let audit = ZeroAudit {
        status: if failures.is_empty() { AuditStatus::Pass } else { AuditStatus::Fail },
        t_max,
        zeros: ordinates.len() as u64,
        checkpoints,
        failures,
    };
    let table = if ordinates.is_empty() {
        ZeroTable { ordinates, source: ZeroSource::Computed, precision_hint: PRECISION_HINT }
    } else {
        ZeroTable::new(ordinates, ZeroSource::Computed, PRECISION_HINT)?
    };
    Ok(ComputedZeros { table, audit })
}

fn scan_block(ev: &ZetaEvaluator, blk: &Block, points: &[f64], indices: &[i64], z_values: &[f64]) -> BlockResult {
    let expected = (blk.b - blk.a) as usize;
    let first = (blk.a - indices[0]) as usize;
    let last = (blk.b - indices[0]) as usize;
    let mut samples = INITIAL_SAMPLES;
    loop {
        // Nodes: every Gram point in the block plus `samples − 1` interior points per interval.
        let mut ts = vec![points[first]];
        let mut zs = vec![z_values[first]];
        for k in first..last {
            let (l, r) = (points[k], points[k + 1]);
            for j in 1..samples {
                let t = l + (r - l) * j as f64 / samples as f64;
                ts.push(t);
                zs.push(ev.hardy_z(t));
            }
            ts.push(r);
            zs.push(z_values[k + 1]);
        }
        let brackets: Vec<usize> = (0..ts.len() - 1).filter(|&i| zs[i] * zs[i + 1] < 0.0).collect();
        if brackets.len() > expected {
            return BlockResult {
                zeros: Vec::new(),
                failure: Some(format!(
                    "({}, {}]: {} sign changes exceed the {} zeros allowed between g_{} and g_{}",
                    blk.lo,
                    blk.hi,
                    brackets.len(),
                    expected,
                    blk.a,
                    blk.b
                )),
            };
        }
        if brackets.len() == expected {
            let zeros = brackets
                .into_iter()
                .map(|i| refine(|t| ev.hardy_z(t), ts[i], ts[i + 1], zs[i], zs[i + 1]))
                .collect();
            return BlockResult { zeros, failure: None };
        }
        if samples >= MAX_SAMPLES {
            return BlockResult {
                zeros: Vec::new(),
                failure: Some(format!(
                    "({}, {}]: found {} of {} zeros between g_{} and g_{} at {} samples per Gram interval",
                    blk.lo,
                    blk.hi,
                    brackets.len(),
                    expected,
                    blk.a,
                    blk.b,
                    samples
                )),
            };
        }
        samples *= 2;
    }
}

/// Illinois regula falsi on a sign-changing bracket, bisecting whenever
/// two steps fail to halve the bracket.
fn refine<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, mut fa: f64, mut fb: f64) -> f64 {
    let mut checkpoint = (b - a).abs();
    for iter in 0..400 {
        let width = (b - a).abs();
        if width <= ROOT_TOLERANCE {
            break;
        }
        let mut c = (a * fb - b * fa) / (fb - fa);
        if iter % 2 == 1 {
            if width > 0.5 * checkpoint {
                c = 0.5 * (a + b);
            }
            checkpoint = width;
        }
        if !(c > a.min(b) && c < a.max(b)) {
            c = 0.5 * (a + b);
        }
        let fc = f(c);
        if fc == 0.0 {
            return c;
        }
        // invariant: fa and fb have opposite signs
        if fc * fb < 0.0 {
            a = b;
            fa = fb;
        } else {
            fa *= 0.5;
        }
        b = c;
        fb = fc;
    }
    0.5 * (a + b)
}

fn audit(ordinates: &[f64], good: &[usize], indices: &[i64], points: &[f64], z_values: &[f64]) -> Vec<AuditCheckpoint> {
    good.iter()
        .map(|&i| {
            let t = points[i];
            AuditCheckpoint {
                gram_index: indices[i],
                t,
                z: z_values[i],
                expected: (theta(t) / PI + 1.0).round() as u64,
                found: ordinates.partition_point(|&g| g <= t) as u64,
            }
        })
        .collect()
}
