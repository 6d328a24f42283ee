use std::f64::consts::PI;

use num_complex::Complex64;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;

use super::check_tolerance;

const PROBE_EDGE: f64 = 1e-7;
const PROBE_TERM_CAP: u64 = 2_000_000_000;

/// (1 − r)·f(z) at z = r·e^{2πip/q}, split by whether q divides n.
///
/// Terms with q | n sit on the positive real axis and blow up as r → 1;
/// the rest are held off the pole by |1 − zⁿ| ≥ sin(π/q).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SingularityProbe {
    pub p: u64,
    pub q: u64,
    pub r: f64,
    pub major_arc: f64,
    pub minor_arc: Complex64,
    /// −(1/q)·log(1 − r^q)
    pub major_lower_bound: f64,
    /// 1/sin(π/q)
    pub minor_upper_bound: f64,
    pub terms_used: u64,
}

impl SingularityProbe {
    /// (1 − r)·|f(z)|
    pub fn scaled_modulus(&self) -> f64 {
        (self.minor_arc + self.major_arc).norm()
    }

    pub fn major_bound_holds(&self) -> bool {
        self.major_arc >= self.major_lower_bound
    }

    pub fn minor_bound_holds(&self) -> bool {
        self.minor_arc.norm() < self.minor_upper_bound
    }
}

pub fn singularity_probe(p: u64, q: u64, r: f64, tol: f64) -> Result<SingularityProbe> {
    if q < 2 || p == 0 {
        return Err(Error::usage(format!("need p ≥ 1 and q ≥ 2, got p={p}, q={q}")));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::usage(format!("p={p} and q={q} are not coprime")));
    }
    if !(r > 0.0 && r <= 1.0 - PROBE_EDGE) {
        return Err(Error::domain(format!(
            "radius must lie in (0, 1 − {PROBE_EDGE}], got {r}"
        )));
    }
    check_tolerance(tol)?;

    let sin_pq = (PI / q as f64).sin();
    let ln_r = r.ln();
    // (1−r)·Σ_{m>n}|term| ≤ r^{n+1}·max(1/(1−r^{n+1}), 1/sin(π/q)), so stop
    // once r^{n+1}·max(…) < tol; 1/(1−r^{n+1}) < 2 past r^{n+1} = 1/2
    let scale = (2.0f64).max(1.0 / sin_pq);
    let needed = ((tol / scale).ln() / ln_r).ceil().max(1.0);
    if needed > PROBE_TERM_CAP as f64 {
        return Err(Error::Size {
            what: "probe terms",
            requested: needed as u64,
            limit: PROBE_TERM_CAP,
        });
    }
    let n_max = needed as u64;

    // 1 − ωʲ for the q roots of unity, ω = e^{2πi/q}
    let one_minus_root: Vec<Complex64> = (0..q)
        .map(|j| {
            let theta = 2.0 * PI * j as f64 / q as f64;
            Complex64::new(2.0 * (theta / 2.0).sin().powi(2), -theta.sin())
        })
        .collect();
    let roots: Vec<Complex64> = (0..q)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / q as f64))
        .collect();

    let mut major = 0.0;
    let mut minor = Complex64::new(0.0, 0.0);
    let mut rn = 1.0;
    for n in 1..=n_max {
        // resync the running power every 1024 steps
        rn = if n % 1024 == 0 { (n as f64 * ln_r).exp() } else { rn * r };
        let one_minus_rn = -(n as f64 * ln_r).exp_m1();
        let j = ((p % q) * (n % q) % q) as usize;
        if j == 0 {
            major += rn / one_minus_rn;
        } else {
            // 1 − rⁿωʲ = (1 − rⁿ) + rⁿ(1 − ωʲ)
            let denom = one_minus_rn + one_minus_root[j] * rn;
            minor += roots[j] * rn / denom;
        }
    }
    let w = 1.0 - r;
    Ok(SingularityProbe {
        p,
        q,
        r,
        major_arc: w * major,
        minor_arc: minor * w,
        major_lower_bound: -(-(q as f64 * ln_r).exp_m1()).ln() / q as f64,
        minor_upper_bound: 1.0 / sin_pq,
        terms_used: n_max,
    })
}

/// (1 − r)|f(re^{2πip/q})| at r = 1 − 2^{−j} for each j.
pub fn divergence_profile(p: u64, q: u64, js: &[u32], tol: f64) -> Result<Vec<f64>> {
    par::map(js, |&j| {
        singularity_probe(p, q, 1.0 - (-(j as f64)).exp2(), tol).map(|s| s.scaled_modulus())
    })
    .into_iter()
    .collect()
}
