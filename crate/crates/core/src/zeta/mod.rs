//! Riemann zeta zeros: ingestion of published tables, direct computation on
//! the critical line, unfolding, zero statistics and the explicit formula.

mod explicit;
mod riemann;
pub mod special;
mod statistics;
mod zeros;

pub use explicit::{
    chebyshev_check, explicit_formula_check, ChebyshevCheck, EvenPair, ExplicitFormulaReport, ZERO_GAP_CONSTANT,
};
pub use riemann::{terms_for_height, ZetaEvaluator};
pub use statistics::{
    montgomery_bin_integrals, unfold, zeta_pair_correlation, zeta_spacing_histogram, PairCorrelationReport,
    UNFOLD_THRESHOLD,
};
pub use zeros::{compute_zeros, gram_point, AuditCheckpoint, AuditStatus, ComputedZeros, ZeroAudit, MAX_HEIGHT};

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spectral_stats::StatsError;

#[derive(Debug, Error, PartialEq)]
pub enum ZetaError {
    #[error("cannot read zero table {path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("zero table contains no ordinates")]
    EmptyTable,
    #[error("height {0} outside (0, 10000]")]
    BadHeight(f64),
    #[error("need at least {needed} unfolded zeros above 2πe, got {got}")]
    TooFewZeros { needed: usize, got: usize },
    #[error("zero table ends at {covered}, but the truncation tolerance needs zeros up to {required}")]
    InsufficientCoverage { covered: f64, required: f64 },
    #[error("prime sum limit {p_max} below e^u_max = {required}")]
    PrimeLimit { p_max: f64, required: f64 },
    #[error("test function must use the plain-exponential convention")]
    WrongConvention,
    #[error("x must be at least 2 and not an integer, got {0}")]
    BadChebyshevPoint(f64),
    #[error("Gram point search failed near index {0}")]
    GramSearch(i64),
    #[error(transparent)]
    Stats(#[from] StatsError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZeroSource {
    File,
    Computed,
}

/// Ordinates γ of zeros ½ + iγ, strictly ascending and positive.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: ZeroSource,
    /// Absolute error bound per ordinate.
    precision_hint: f64,
}

impl ZeroTable {
    pub fn new(ordinates: Vec<f64>, source: ZeroSource, precision_hint: f64) -> Result<Self, ZetaError> {
        if ordinates.is_empty() {
            return Err(ZetaError::EmptyTable);
        }
        for (i, &g) in ordinates.iter().enumerate() {
            if !(g.is_finite() && g > 0.0) {
                return Err(ZetaError::Parse { line: i + 1, message: format!("ordinate {g} is not positive") });
            }
            if i > 0 && g <= ordinates[i - 1] {
                return Err(ZetaError::Parse { line: i + 1, message: "ordinates must be strictly ascending".into() });
            }
        }
        Ok(ZeroTable { ordinates, source, precision_hint })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    pub fn precision_hint(&self) -> f64 {
        self.precision_hint
    }

    /// Largest ordinate.
    pub fn coverage(&self) -> f64 {
        self.ordinates[self.ordinates.len() - 1]
    }

    /// The first `count` ordinates, or `None` if that would be empty.
    pub fn first(&self, count: usize) -> Option<ZeroTable> {
        (count > 0).then(|| ZeroTable { ordinates: self.ordinates[..count.min(self.len())].to_vec(), ..*self })
    }

    /// Ordinates ≤ `t`, or `None` if that would be empty.
    pub fn truncate(&self, t: f64) -> Option<ZeroTable> {
        let count = self.ordinates.partition_point(|&g| g <= t);
        self.first(count)
    }

    /// Text form accepted by [`parse_zeros`]; round-trips exactly.
    pub fn to_text(&self) -> String {
        let mut out = format!("# {} zeros, source {:?}, precision {:e}\n", self.len(), self.source, self.precision_hint);
        for g in &self.ordinates {
            writeln!(out, "{g:?}").unwrap();
        }
        out
    }
}

/// Reads a zero table: one decimal ordinate per line, ascending, `#` comments.
pub fn load_zeros(path: &Path) -> Result<ZeroTable, ZetaError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ZetaError::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_zeros(&text)
}

/// The precision hint of a parsed table is half a unit in the last decimal
/// place of the least precise line.
pub fn parse_zeros(text: &str) -> Result<ZeroTable, ZetaError> {
    let mut ordinates = Vec::new();
    let mut min_decimals = usize::MAX;
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = i + 1;
        let g: f64 = line
            .parse()
            .map_err(|_| ZetaError::Parse { line: line_no, message: format!("not a number: {line:?}") })?;
        if !(g.is_finite() && g > 0.0) {
            return Err(ZetaError::Parse { line: line_no, message: format!("ordinate {g} is not positive") });
        }
        if let Some(&prev) = ordinates.last() {
            if g <= prev {
                return Err(ZetaError::Parse {
                    line: line_no,
                    message: format!("ordinate {g} does not exceed previous {prev}"),
                });
            }
        }
        let decimals = match line.find(['e', 'E']) {
            Some(_) => 16,
            None => line.find('.').map_or(0, |dot| line.len() - dot - 1),
        };
        min_decimals = min_decimals.min(decimals);
        ordinates.push(g);
    }
    if ordinates.is_empty() {
        return Err(ZetaError::EmptyTable);
    }
    let hint = (0.5 * 10f64.powi(-(min_decimals.min(16) as i32))).max(f64::EPSILON * ordinates[ordinates.len() - 1]);
    ZeroTable::new(ordinates, ZeroSource::File, hint)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_three_zeros() {
        let t = parse_zeros("14.134725\n21.022040\n25.010858\n").unwrap();
        assert_eq!(t.ordinates(), &[14.134725, 21.022040, 25.010858]);
        assert_eq!(t.source(), ZeroSource::File);
        assert!((t.precision_hint() - 5e-7).abs() < 1e-20);
    }

    #[test]
    fn monotonicity_error_names_line() {
        assert_eq!(
            parse_zeros("21.0\n14.1\n").unwrap_err(),
            ZetaError::Parse { line: 2, message: "ordinate 14.1 does not exceed previous 21".into() }
        );
        let err = parse_zeros("# header\n14.1\n\nabc\n").unwrap_err();
        assert!(matches!(err, ZetaError::Parse { line: 4, .. }));
        assert!(matches!(parse_zeros("14.1\n-3\n").unwrap_err(), ZetaError::Parse { line: 2, .. }));
    }

    #[test]
    fn comments_only_is_empty() {
        assert_eq!(parse_zeros("# nothing\n#\n").unwrap_err(), ZetaError::EmptyTable);
        assert_eq!(parse_zeros("").unwrap_err(), ZetaError::EmptyTable);
    }

    #[test]
    fn text_round_trip_and_truncation() {
        let t = ZeroTable::new(vec![14.134725141734694, 21.022039638771555, 25.01085758014569], ZeroSource::Computed, 1e-9)
            .unwrap();
        let back = parse_zeros(&t.to_text()).unwrap();
        assert_eq!(back.ordinates(), t.ordinates());
        assert_eq!(t.truncate(22.0).unwrap().len(), 2);
        assert!(t.truncate(10.0).is_none());
        assert_eq!(t.first(10).unwrap().len(), 3);
    }

    #[test]
    fn missing_file() {
        assert!(matches!(load_zeros(Path::new("/nonexistent/zeros.txt")), Err(ZetaError::Io { .. })));
    }
}
