//! Subcommand bodies. Each returns its artifacts in memory; nothing touches
//! the output directory until every artifact has been produced.

use anyhow::{bail, Context, Result};
use serde::Serialize;
use serde_json::json;
use spectra_lab::dirichlet::{one_level_density, required_sieve_limit, sieve};
use spectra_lab::experiments::{ensemble_density, ensemble_moments, ensemble_spacings, Binning, EnsembleConfig};
use spectra_lab::spectral_stats::SPACING_REFERENCES;
use spectra_lab::zeta::{
    compute_zeros, explicit_formula_check, load_zeros, zeta_pair_correlation, zeta_spacing_histogram, AuditStatus,
    ZeroTable,
};
use spectra_lab::{Convention, Execution, Histogram, Normalization, ReferenceDensity, TestFunction};

use crate::args::{
    DensityArgs, EnsembleArgs, ExplicitArgs, MomentArgs, OneLevelArgs, SpacingArgs, ZeroSourceArgs, ZerosArgs, ZetaStat,
    ZetaStatsArgs,
};

/// One output file, named relative to the output directory.
pub struct Artifact {
    pub name: String,
    pub contents: String,
}

impl Artifact {
    fn text(name: &str, contents: String) -> Self {
        Artifact { name: name.to_string(), contents }
    }

    fn json<T: Serialize>(name: &str, value: &T) -> Result<Self> {
        let mut contents = serde_json::to_string_pretty(value)?;
        contents.push('\n');
        Ok(Artifact::text(name, contents))
    }
}

const EXEC: Execution = Execution::Parallel;

fn config(a: &EnsembleArgs) -> Result<EnsembleConfig> {
    Ok(EnsembleConfig::new(usize::try_from(a.n)?, usize::try_from(a.samples)?, a.dist.into(), a.seed))
}

pub fn ensemble_density_cmd(a: &DensityArgs) -> Result<Vec<Artifact>> {
    let binning = Binning { lo: a.range.lo, hi: a.range.hi, bins: a.bins as usize };
    let report = ensemble_density(&config(&a.ensemble)?, binning, EXEC)?;
    let h = &report.histogram;
    let csv = h.to_csv(&[("semicircle", ReferenceDensity::Semicircle)]);
    let summary = json!({
        "eigenvalues": report.eigenvalues,
        "l1_semicircle": report.l1_semicircle,
        "ks_semicircle": report.ks_semicircle,
        "underflow": h.underflow(),
        "overflow": h.overflow(),
        "outside_mass": (h.underflow() + h.overflow()) as f64 / h.total() as f64,
    });
    Ok(vec![Artifact::text("density.csv", csv), Artifact::json("summary.json", &summary)?])
}

pub fn ensemble_spacings_cmd(a: &SpacingArgs) -> Result<Vec<Artifact>> {
    let binning = Binning { lo: 0.0, hi: 4.0, bins: a.bins as usize };
    let report = ensemble_spacings(&config(&a.ensemble)?, a.window, binning, EXEC)?;
    let csv = report.histogram.to_csv(&SPACING_REFERENCES);
    let summary = json!({
        "spacings": report.spacings,
        "window": a.window,
        "ks": report.ks,
        "l1": report.l1,
    });
    Ok(vec![Artifact::text("spacings.csv", csv), Artifact::json("summary.json", &summary)?])
}

pub fn moments_cmd(a: &MomentArgs) -> Result<Vec<Artifact>> {
    let rows = ensemble_moments(&config(&a.ensemble)?, a.kmax, EXEC)?;
    let mut csv = String::from("k,ensemble,std_error,semicircle\n");
    for r in &rows {
        csv.push_str(&format!("{},{:.16e},{:.16e},{:.16e}\n", r.k, r.ensemble, r.std_error, r.semicircle));
    }
    Ok(vec![Artifact::text("moments.csv", csv), Artifact::json("summary.json", &json!({ "moments": rows }))?])
}

/// The zero table named by the arguments; computed tables must pass their audit.
fn zero_table(source: &ZeroSourceArgs) -> Result<ZeroTable> {
    match (&source.t_max, &source.input) {
        (Some(t), None) => {
            let computed = compute_zeros(*t, EXEC)?;
            if computed.audit.status != AuditStatus::Pass {
                bail!("zero count audit failed: {}", computed.audit.failures.join("; "));
            }
            if computed.table.is_empty() {
                bail!("no zeros with ordinate ≤ {t}");
            }
            Ok(computed.table)
        }
        (None, Some(path)) => load_zeros(path).with_context(|| format!("loading {}", path.display())),
        _ => bail!("exactly one of --t-max and --in is required"),
    }
}

pub fn zeta_zeros_cmd(a: &ZerosArgs) -> Result<Vec<Artifact>> {
    match (&a.source.t_max, &a.source.input) {
        (Some(t), None) => {
            let computed = compute_zeros(*t, EXEC)?;
            if computed.audit.status != AuditStatus::Pass {
                bail!("zero count audit failed: {}", computed.audit.failures.join("; "));
            }
            Ok(vec![
                Artifact::text("zeros.txt", computed.table.to_text()),
                Artifact::json("audit.json", &computed.audit)?,
            ])
        }
        _ => {
            let table = zero_table(&a.source)?;
            let audit = json!({
                "status": "PASS",
                "source": table.source(),
                "zeros": table.len(),
                "coverage": table.coverage(),
                "precision_hint": table.precision_hint(),
            });
            Ok(vec![Artifact::text("zeros.txt", table.to_text()), Artifact::json("audit.json", &audit)?])
        }
    }
}

pub fn zeta_stats_cmd(a: &ZetaStatsArgs) -> Result<Vec<Artifact>> {
    let mut table = zero_table(&a.source)?;
    if let Some(count) = a.count {
        table = table.first(count).context("--count must be positive")?;
    }
    match a.stat {
        ZetaStat::Spacings => {
            let histogram = Histogram::uniform(0.0, 4.0, a.bins as usize, Normalization::Density)?;
            let report = zeta_spacing_histogram(&table, histogram)?;
            let csv = report.histogram.to_csv(&SPACING_REFERENCES);
            let summary = json!({
                "zeros": table.len(),
                "spacings": report.spacings,
                "ks": report.ks,
                "l1": report.l1,
            });
            Ok(vec![Artifact::text("zeta_spacings.csv", csv), Artifact::json("summary.json", &summary)?])
        }
        ZetaStat::Paircorr => {
            if !(a.cutoff >= 0.0 && a.cutoff.is_finite()) {
                bail!("cutoff must be a finite non-negative number, got {}", a.cutoff);
            }
            let report = zeta_pair_correlation(&table, a.bins as usize, a.cutoff)?;
            let h = &report.correlation.histogram;
            let densities = report.correlation.densities();
            let csv = h.to_csv_with(&densities, |b| vec![report.montgomery[b] / h.width(b)], &["montgomery"]);
            let summary = json!({
                "zeros": table.len(),
                "points": report.correlation.points,
                "cutoff": a.cutoff,
                "l1_montgomery": report.l1_montgomery,
                "note": report.correlation.note(),
            });
            Ok(vec![Artifact::text("pair_correlation.csv", csv), Artifact::json("summary.json", &summary)?])
        }
    }
}

pub fn explicit_formula_cmd(a: &ExplicitArgs) -> Result<Vec<Artifact>> {
    if !(a.u_max > 0.0 && a.u_max.is_finite()) {
        bail!("--u-max must be positive, got {}", a.u_max);
    }
    let table = zero_table(&a.source)?;
    let p_max = a.p_max.unwrap_or_else(|| a.u_max.exp().ceil() as u64).max(2);
    let primes = sieve(p_max)?;
    let tf = TestFunction::fejer(a.u_max, Convention::PlainExp);
    let report = explicit_formula_check(&table, &tf, &primes, p_max, a.tolerance, EXEC)?;
    Ok(vec![Artifact::json("explicit_formula.json", &report)?])
}

pub fn one_level_cmd(a: &OneLevelArgs) -> Result<Vec<Artifact>> {
    if !(a.sigma > 0.0 && a.sigma.is_finite()) {
        bail!("--sigma must be positive, got {}", a.sigma);
    }
    let tf = TestFunction::fejer(a.sigma, Convention::TwoPi);
    let limit = required_sieve_limit(a.m, a.sigma.min(2.0)).max(2);
    let primes = sieve(limit)?;
    let report = one_level_density(a.m, &tf, &primes, EXEC)?;
    Ok(vec![Artifact::json("one_level.json", &report)?])
}
