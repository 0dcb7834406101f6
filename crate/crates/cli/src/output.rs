//! Run manifests and all-or-nothing artifact writing.

use std::fs;
use std::path::Path;
use std::time::Duration;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};

use crate::args::Command;
use crate::commands::Artifact;

pub const MANIFEST: &str = "manifest.json";

#[derive(Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    #[serde(flatten)]
    pub command: Command,
    pub seed: Option<u64>,
    pub threads: usize,
    pub artifacts: Vec<String>,
    pub duration_secs: f64,
}

impl Manifest {
    pub fn new(command: &Command, threads: usize, artifacts: &[Artifact], elapsed: Duration) -> Self {
        Manifest {
            tool: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.clone(),
            seed: command.seed(),
            threads,
            artifacts: artifacts.iter().map(|a| a.name.clone()).collect(),
            duration_secs: elapsed.as_secs_f64(),
        }
    }
}

pub fn read_manifest(path: &Path) -> Result<Command> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let manifest: Manifest = serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(manifest.command)
}

/// Writes every artifact and the single-line manifest into `dir`. Files are
/// staged under temporary names and renamed only once all were written.
pub fn write_all(dir: &Path, artifacts: &[Artifact], manifest: &Manifest) -> Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let mut line = serde_json::to_string(manifest)?;
    line.push('\n');
    let files: Vec<(&str, &str)> = artifacts
        .iter()
        .map(|a| (a.name.as_str(), a.contents.as_str()))
        .chain(std::iter::once((MANIFEST, line.as_str())))
        .collect();
    let staged: Vec<_> = files.iter().map(|(name, _)| dir.join(format!(".{name}.partial"))).collect();
    let result = files.iter().zip(&staged).try_for_each(|((_, contents), tmp)| {
        fs::write(tmp, contents).with_context(|| format!("writing {}", tmp.display()))
    });
    if let Err(e) = result {
        for tmp in &staged {
            let _ = fs::remove_file(tmp);
        }
        return Err(e);
    }
    for ((name, _), tmp) in files.iter().zip(&staged) {
        fs::rename(tmp, dir.join(name)).with_context(|| format!("finalizing {name}"))?;
    }
    Ok(())
}
