//! Command-line surface. Every subcommand's parameters serialize into the run
//! manifest, and `replay` deserializes them back.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use spectra_lab::EntryDistribution;

#[derive(Debug, Parser)]
#[command(name = "spectra-lab", version, about = "Random-matrix, zeta-zero and Dirichlet spectral experiments")]
pub struct Cli {
    /// Worker threads; never changes numeric output.
    #[arg(long, global = true, env = "SPECTRA_LAB_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, PartialEq, Subcommand, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "subcommand", content = "params")]
pub enum Command {
    /// Pooled normalized-eigenvalue histogram against the semicircle law.
    EnsembleDensity(DensityArgs),
    /// Bulk nearest-neighbour spacings against the spacing laws.
    EnsembleSpacings(SpacingArgs),
    /// Ensemble moments M(k) against the semicircle moments.
    Moments(MomentArgs),
    /// Compute or ingest zeta zeros and emit the table with its count audit.
    ZetaZeros(ZerosArgs),
    /// Spacing or pair-correlation statistics of unfolded zeta zeros.
    ZetaStats(ZetaStatsArgs),
    /// Both sides of the explicit formula for a Fejér test function.
    ExplicitFormula(ExplicitArgs),
    /// Averaged 1-level density of Dirichlet L-functions modulo a prime.
    OneLevel(OneLevelArgs),
    /// Re-run the command recorded in a manifest.
    #[serde(skip)]
    Replay(ReplayArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::EnsembleDensity(_) => "ensemble-density",
            Command::EnsembleSpacings(_) => "ensemble-spacings",
            Command::Moments(_) => "moments",
            Command::ZetaZeros(_) => "zeta-zeros",
            Command::ZetaStats(_) => "zeta-stats",
            Command::ExplicitFormula(_) => "explicit-formula",
            Command::OneLevel(_) => "one-level",
            Command::Replay(_) => "replay",
        }
    }

    pub fn out(&self) -> &PathBuf {
        match self {
            Command::EnsembleDensity(a) => &a.out,
            Command::EnsembleSpacings(a) => &a.out,
            Command::Moments(a) => &a.out,
            Command::ZetaZeros(a) => &a.out,
            Command::ZetaStats(a) => &a.out,
            Command::ExplicitFormula(a) => &a.out,
            Command::OneLevel(a) => &a.out,
            Command::Replay(a) => &a.out,
        }
    }

    pub fn set_out(&mut self, out: PathBuf) {
        match self {
            Command::EnsembleDensity(a) => a.out = out,
            Command::EnsembleSpacings(a) => a.out = out,
            Command::Moments(a) => a.out = out,
            Command::ZetaZeros(a) => a.out = out,
            Command::ZetaStats(a) => a.out = out,
            Command::ExplicitFormula(a) => a.out = out,
            Command::OneLevel(a) => a.out = out,
            Command::Replay(a) => a.out = out,
        }
    }

    pub fn seed(&self) -> Option<u64> {
        match self {
            Command::EnsembleDensity(a) => Some(a.ensemble.seed),
            Command::EnsembleSpacings(a) => Some(a.ensemble.seed),
            Command::Moments(a) => Some(a.ensemble.seed),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Dist {
    Gaussian,
    Uniform,
    Cauchy,
}

impl From<Dist> for EntryDistribution {
    fn from(d: Dist) -> Self {
        match d {
            Dist::Gaussian => EntryDistribution::StandardGaussian,
            Dist::Uniform => EntryDistribution::UniformSymmetric,
            Dist::Cauchy => EntryDistribution::Cauchy,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct EnsembleArgs {
    /// Matrix dimension.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub n: u64,
    /// Number of matrices.
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub samples: u64,
    /// Entry distribution.
    #[arg(long, value_enum)]
    pub dist: Dist,
    /// Master seed; matrix i uses substream i.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct DensityArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub bins: u64,
    /// Histogram range as LO,HI.
    #[arg(long, default_value = "-1.5,1.5", value_parser = parse_range, allow_hyphen_values = true)]
    pub range: Range,
    /// Output directory.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct SpacingArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    /// Central fraction of each spectrum used for spacings, in (0, 1].
    #[arg(long, default_value_t = 0.2, value_parser = parse_window)]
    pub window: f64,
    /// Bins on [0, 4].
    #[arg(long, default_value_t = 40, value_parser = clap::value_parser!(u64).range(1..))]
    pub bins: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct MomentArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub ensemble: EnsembleArgs,
    /// Highest moment order.
    #[arg(long)]
    pub kmax: u32,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
#[group(required = true, multiple = false, id = "zero_source")]
pub struct ZeroSourceArgs {
    /// Compute all zeros with 0 < γ ≤ T (T ≤ 10000).
    #[arg(long, group = "zero_source")]
    pub t_max: Option<f64>,
    /// Read a zero table (one ordinate per line, `#` comments).
    #[arg(long = "in", group = "zero_source")]
    pub input: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ZerosArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: ZeroSourceArgs,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZetaStat {
    Spacings,
    Paircorr,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ZetaStatsArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: ZeroSourceArgs,
    /// Use only the first COUNT zeros of the table.
    #[arg(long)]
    pub count: Option<usize>,
    #[arg(long, value_enum)]
    pub stat: ZetaStat,
    /// Bins: on [0, 4] for spacings, on (0, cutoff] for pair correlation.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    pub bins: u64,
    /// Largest pair difference, in mean spacings.
    #[arg(long, default_value_t = 3.0)]
    pub cutoff: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct ExplicitArgs {
    #[command(flatten)]
    #[serde(flatten)]
    pub source: ZeroSourceArgs,
    /// Support half-width a of g(u) = (1/2π) max(0, 1 − |u|/a).
    #[arg(long)]
    pub u_max: f64,
    /// Prime sum limit; defaults to ⌈e^a⌉.
    #[arg(long)]
    pub p_max: Option<u64>,
    /// Largest admissible bound on the omitted zeros.
    #[arg(long, default_value_t = 1e-2)]
    pub tolerance: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args, Serialize, Deserialize)]
pub struct OneLevelArgs {
    /// Prime conductor.
    #[arg(long)]
    pub m: u64,
    /// Support of the Fejér transform, 0 < σ < 2.
    #[arg(long)]
    pub sigma: f64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct ReplayArgs {
    /// Manifest written by an earlier run.
    #[arg(long)]
    pub manifest: PathBuf,
    /// Output directory for the replayed artifacts.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Range {
    pub lo: f64,
    pub hi: f64,
}

fn parse_range(s: &str) -> Result<Range, String> {
    let (lo, hi) = s.split_once(',').ok_or("expected LO,HI")?;
    let lo: f64 = lo.trim().parse().map_err(|e| format!("bad LO: {e}"))?;
    let hi: f64 = hi.trim().parse().map_err(|e| format!("bad HI: {e}"))?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(format!("need finite LO < HI, got {lo},{hi}"));
    }
    Ok(Range { lo, hi })
}

fn parse_window(s: &str) -> Result<f64, String> {
    let w: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if !(w > 0.0 && w <= 1.0) {
        return Err(format!("window must lie in (0, 1], got {w}"));
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors() {
        let base = ["spectra-lab", "ensemble-density", "--n", "10", "--dist", "gaussian", "--out", "x"];
        let mut zero = base.to_vec();
        zero.extend(["--samples", "0"]);
        assert!(Cli::try_parse_from(zero).is_err());
        let mut missing_dist = vec!["spectra-lab", "ensemble-density", "--n", "10", "--samples", "2", "--out", "x"];
        assert!(Cli::try_parse_from(missing_dist.clone()).is_err());
        missing_dist.extend(["--dist", "cauchy", "--range=-2,2"]);
        assert!(Cli::try_parse_from(missing_dist).is_ok());
        let window = [
            "spectra-lab", "ensemble-spacings", "--n", "10", "--samples", "2", "--dist", "uniform", "--window", "1.5",
            "--out", "x",
        ];
        assert!(Cli::try_parse_from(window).is_err());
        assert!(Cli::try_parse_from(["spectra-lab", "zeta-zeros", "--out", "x"]).is_err());
        assert!(Cli::try_parse_from(["spectra-lab", "zeta-zeros", "--t-max", "5", "--in", "f", "--out", "x"]).is_err());
    }

    #[test]
    fn params_round_trip_through_json() {
        let cli = Cli::try_parse_from([
            "spectra-lab", "ensemble-spacings", "--n", "30", "--samples", "4", "--dist", "cauchy", "--out", "o",
        ])
        .unwrap();
        let json = serde_json::to_string(&cli.command).unwrap();
        let back: Command = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cli.command);
    }
}
