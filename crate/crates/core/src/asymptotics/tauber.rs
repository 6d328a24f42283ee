use serde::Serialize;

use crate::arith::ArithTable;
use crate::consts::TWO_GAMMA;
use crate::error::{Error, Result};
use crate::par;

/// [Σ (log n − d(n))e^{−nx} + 2γ/x]·√x.
///
/// The d-part is summed as Σ_m 1/(e^{mx} − 1), so no table is needed.
pub fn tauber_logd_residual(x: f64) -> Result<f64> {
    if !(1e-3..=0.2).contains(&x) {
        return Err(Error::domain(format!("need 1e−3 ≤ x ≤ 0.2, got {x}")));
    }
    let mut logs = 0.0;
    for n in 2u64.. {
        let t = (n as f64).ln() * (-(n as f64) * x).exp();
        logs += t;
        if t < 1e-18 * logs {
            break;
        }
    }
    let divisors = super::dseries_lambert(x)?;
    Ok((logs - divisors + TWO_GAMMA / x) * x.sqrt())
}

fn check_x(x: f64, table: &ArithTable) -> Result<u64> {
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::domain(format!("need x ≥ 1, got {x}")));
    }
    let n = x.floor() as u64;
    table.check_covers("h(x) argument", n)?;
    Ok(n)
}

fn h_range(from: u64, to: u64, table: &ArithTable) -> f64 {
    // Σ_{from<n≤to} (Λ(n) − 1)/n
    par::chunked_sum((to - from) as usize, |i| {
        let n = from + 1 + i as u64;
        (table.von_mangoldt(n) - 1.0) / n as f64
    })
}

/// h(x) = Σ_{n≤x} (Λ(n) − 1)/n, which tends to −2γ.
pub fn tauber_h(x: f64, table: &ArithTable) -> Result<f64> {
    let n = check_x(x, table)?;
    Ok(h_range(0, n, table))
}

/// Mean of h(n) over the integers in [x, 2x].
pub fn tauber_h_window_mean(x: f64, table: &ArithTable) -> Result<f64> {
    let lo = check_x(x.ceil(), table)?;
    let hi = check_x(2.0 * x, table)?;
    let mut h = h_range(0, lo, table);
    let mut acc = h;
    for n in lo + 1..=hi {
        h += (table.von_mangoldt(n) - 1.0) / n as f64;
        acc += h;
    }
    Ok(acc / (hi - lo + 1) as f64)
}

/// Smallest value of h(ρx) − h(x) + log ρ + 2/x over a grid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SlowDecrease {
    pub worst_deficit: f64,
    pub x: f64,
    pub rho: f64,
}

pub fn slowly_decreasing_check(
    xs: &[f64],
    rhos: &[f64],
    table: &ArithTable,
) -> Result<SlowDecrease> {
    if xs.is_empty() || rhos.is_empty() {
        return Err(Error::usage("slow-decrease check needs nonempty grids"));
    }
    if let Some(r) = rhos.iter().find(|&&r| !(r > 1.0) || !r.is_finite()) {
        return Err(Error::domain(format!("ρ must exceed 1, got {r}")));
    }
    let pairs: Vec<(f64, f64)> = xs
        .iter()
        .flat_map(|&x| rhos.iter().map(move |&r| (x, r)))
        .collect();
    let deficits: Result<Vec<f64>> = par::map(&pairs, |&(x, rho)| {
        let a = check_x(x, table)?;
        let b = check_x(rho * x, table)?;
        Ok(h_range(a, b, table) + rho.ln() + 2.0 / x)
    })
    .into_iter()
    .collect();
    let deficits = deficits?;
    let (i, &worst) = deficits
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.total_cmp(b.1))
        .expect("nonempty");
    Ok(SlowDecrease {
        worst_deficit: worst,
        x: pairs[i].0,
        rho: pairs[i].1,
    })
}
