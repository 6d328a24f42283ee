//! Small-z behaviour of Σ d(n)e^{−nz} and related checks.
//!
//! Every O(·) claim is turned into a [`ResidualScan`]: residuals on a grid
//! marching toward the limit, with a fitted log-log slope.

mod partition;
mod tauber;
mod voronoi;
mod wigert;

use serde::Serialize;

use crate::error::{Error, Result};

pub use partition::{partition_log_check, PartitionCheck};
pub use tauber::{
    slowly_decreasing_check, tauber_h, tauber_h_window_mean, tauber_logd_residual, SlowDecrease,
};
pub use voronoi::{
    voronoi_breakdown, voronoi_rhs, voronoi_rhs_truncated, VoronoiBreakdown, MAX_VORONOI_TERMS,
};
pub use wigert::{
    dseries_direct, dseries_lambert, schlomilch_coefficients, schlomilch_residual,
    schlomilch_residual_scan, wigert_eval, wigert_expansion, wigert_residual,
    wigert_residual_real, wigert_residual_scan, AsymptoticExpansion, LeadingTerm,
    MAX_WIGERT_ORDER, WIGERT_MAX_ARG,
};

/// Residuals along a grid approaching a limit, with the slope of
/// log|residual| against log(parameter).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResidualScan {
    pub points: Vec<(f64, f64)>,
    pub fitted_exponent: f64,
}

impl ResidualScan {
    pub fn from_points(points: Vec<(f64, f64)>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::usage("a residual scan needs at least one point"));
        }
        let fitted_exponent = loglog_slope(&points);
        Ok(Self {
            points,
            fitted_exponent,
        })
    }
}

/// Least-squares slope of ln|r| against ln t. NaN with fewer than two
/// usable points.
pub fn loglog_slope(points: &[(f64, f64)]) -> f64 {
    let pts: Vec<(f64, f64)> = points
        .iter()
        .filter(|(t, r)| *t > 0.0 && *r != 0.0 && r.is_finite())
        .map(|(t, r)| (t.ln(), r.abs().ln()))
        .collect();
    if pts.len() < 2 {
        return f64::NAN;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx) * (p.0 - mx)).sum();
    sxy / sxx
}

/// `start, start/2, …` with `halvings` halvings.
pub fn halving_grid(start: f64, halvings: u32) -> Vec<f64> {
    (0..=halvings).map(|k| start / 2f64.powi(k as i32)).collect()
}

fn check_decreasing(xs: &[f64]) -> Result<()> {
    if xs.is_empty() {
        return Err(Error::usage("empty grid"));
    }
    if xs.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::usage("grid must be strictly decreasing toward the limit"));
    }
    Ok(())
}
