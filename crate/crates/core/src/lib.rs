//! Spectral statistics for random real symmetric matrices, Riemann zeta
//! zeros and the family of Dirichlet L-functions of prime conductor.
//!
//! The crate is organised bottom-up:
//!
//! * [`ensembles`] samples seeded symmetric matrices,
//! * [`eigen`] turns them into spectra and trace-power moments,
//! * [`spectral_stats`] holds histograms, reference laws, spacings, pair
//!   correlation and goodness-of-fit distances,
//! * [`zeta`] computes or ingests zeta zeros and checks the explicit formula,
//! * [`dirichlet`] builds prime tables, character tables and the averaged
//!   1-level density,
//! * [`experiments`] wires these into the ensemble pipelines driven by the CLI.
//!
//! Data-parallel loops go through [`par::Execution`]; with the `parallel`
//! feature disabled every path runs sequentially and produces the same bits.

pub mod dirichlet;
pub mod eigen;
pub mod ensembles;
pub mod experiments;
pub mod par;
pub mod quad;
pub mod spectral_stats;
pub mod test_function;
pub mod zeta;

pub use eigen::{eigenvalues, Spectrum};
pub use ensembles::{sample_matrix, EntryDistribution, Seed, SymmetricMatrix};
pub use par::Execution;
pub use spectral_stats::{Histogram, Normalization, ReferenceDensity};
pub use test_function::{Convention, TestFunction};
pub use zeta::ZeroTable;
