use serde::Serialize;

use crate::consts::PI_SQUARED_OVER_SIX;
use crate::error::{Error, Result};

/// Σ x^m/m² < (1−x)·log F(x) < (π²/6)·x, where F = Π 1/(1 − xⁿ).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct PartitionCheck {
    pub x: f64,
    pub lhs: f64,
    pub mid: f64,
    pub rhs: f64,
}

impl PartitionCheck {
    pub fn ordered(&self) -> bool {
        self.lhs < self.mid && self.mid < self.rhs
    }

    /// (mid − π²/6)/(π²/6)
    pub fn gap_to_limit(&self) -> f64 {
        self.mid / PI_SQUARED_OVER_SIX - 1.0
    }
}

pub fn partition_log_check(x: f64) -> Result<PartitionCheck> {
    if !(1e-4..=1.0 - 1e-4).contains(&x) {
        return Err(Error::domain(format!("need 1e−4 ≤ x ≤ 1 − 1e−4, got {x}")));
    }
    let ln_x = x.ln();
    let one_minus_x = 1.0 - x;

    let mut lhs = 0.0;
    for m in 1u64.. {
        let xm = (m as f64 * ln_x).exp();
        lhs += xm / (m * m) as f64;
        // remaining terms are below x^{m+1}/((m+1)²(1−x))
        let tail = xm * x / ((m + 1) * (m + 1)) as f64 / one_minus_x;
        if tail < 1e-17 * lhs {
            break;
        }
    }

    // log F(x) = Σ_m (1/m)·x^m/(1 − x^m)
    let mut log_f = 0.0;
    for m in 1u64.. {
        let xm = (m as f64 * ln_x).exp();
        let t = xm / (m as f64 * -(m as f64 * ln_x).exp_m1());
        log_f += t;
        let tail = t * x / one_minus_x;
        if tail < 1e-17 * log_f {
            break;
        }
    }

    Ok(PartitionCheck {
        x,
        lhs,
        mid: one_minus_x * log_f,
        rhs: PI_SQUARED_OVER_SIX * x,
    })
}
