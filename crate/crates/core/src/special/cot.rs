use std::f64::consts::PI;

use crate::error::{Error, Result};

use super::bernoulli::bernoulli_f64;

pub const MAX_COT_ORDER: usize = 30;

/// Partial sum of ½cot(h/2) − 1/h and a rigorous bound on what it omits.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CotExpansion {
    pub value: f64,
    pub remainder_bound: f64,
}

/// Σ_{m=1}^{k−1} B_{2m}(−1)^m h^{2m−1}/(2m)! with remainder bound
/// |B_{2k}| h^{2k}/((2k)! |sin h|), for 0 < h < π.
///
/// The Euler–Maclaurin remainder carries a factor cos(hθ) for some unknown
/// θ ∈ (0, 1); the bound takes |cos(hθ)| ≤ 1.
pub fn cot_half_expansion(h: f64, k: usize) -> Result<CotExpansion> {
    if !(h > 0.0 && h < PI) {
        return Err(Error::domain(format!("cot expansion needs 0 < h < π, got {h}")));
    }
    if !(1..=MAX_COT_ORDER).contains(&k) {
        return Err(Error::domain(format!(
            "cot expansion order must be in 1..={MAX_COT_ORDER}, got {k}"
        )));
    }
    let h2 = h * h;
    let mut value = 0.0;
    // h^{2m−1}/(2m)!
    let mut power_over_fact = h / 2.0;
    for m in 1..k {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        value += sign * bernoulli_f64(2 * m) * power_over_fact;
        power_over_fact *= h2 / ((2 * m + 1) * (2 * m + 2)) as f64;
    }
    let remainder_bound = bernoulli_f64(2 * k).abs() * power_over_fact * h / h.sin().abs();
    Ok(CotExpansion {
        value,
        remainder_bound,
    })
}
