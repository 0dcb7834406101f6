mod args;
mod commands;
mod output;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::Parser;

use args::{Cli, Command};

fn run(command: &Command, threads: usize) -> Result<()> {
    let started = Instant::now();
    let artifacts = match command {
        Command::EnsembleDensity(a) => commands::ensemble_density_cmd(a),
        Command::EnsembleSpacings(a) => commands::ensemble_spacings_cmd(a),
        Command::Moments(a) => commands::moments_cmd(a),
        Command::ZetaZeros(a) => commands::zeta_zeros_cmd(a),
        Command::ZetaStats(a) => commands::zeta_stats_cmd(a),
        Command::ExplicitFormula(a) => commands::explicit_formula_cmd(a),
        Command::OneLevel(a) => commands::one_level_cmd(a),
        Command::Replay(r) => {
            let mut recorded = output::read_manifest(&r.manifest)?;
            recorded.set_out(r.out.clone());
            return run(&recorded, threads);
        }
    }
    .with_context(|| format!("{} failed", command.name()))?;
    let manifest = output::Manifest::new(command, threads, &artifacts, started.elapsed());
    output::write_all(command.out(), &artifacts, &manifest)?;
    println!("{}", serde_json::to_string(&manifest)?);
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n.max(1));
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: cannot start thread pool: {e}");
            return ExitCode::FAILURE;
        }
    };
    let threads = pool.current_num_threads();
    match pool.install(|| run(&cli.command, threads)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
