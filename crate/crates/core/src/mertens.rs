//! Mertens' constant H = Σ_p Σ_{m≥2} 1/(m·p^m) and the two Mertens theorems.
//!
//! H is computed two ways: from −Σ μ(n)·log ζ(n)/n, and directly over
//! primes with a rigorous bracket for everything left out.

use serde::Serialize;

use crate::arith::{prime_reciprocal_sum, ArithTable};
use crate::asymptotics::ResidualScan;
use crate::consts::{EULER_GAMMA, MERTENS_H};
use crate::error::{Error, Result};
use crate::par;
use crate::special::{e1_scaled, log_zeta, prime_zeta};

fn mobius_small(mut n: u64) -> i32 {
    let mut mu = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            mu = -mu;
        }
        p += 1;
    }
    if n > 1 {
        mu = -mu;
    }
    mu
}

/// H = −Σ_{n≥2} μ(n)·log ζ(n)/n, with the number of terms summed.
pub fn mertens_h_mobius_terms() -> (f64, u64) {
    let mut h = 0.0;
    let mut n = 2;
    loop {
        let lz = log_zeta(n as f64).expect("n ≥ 2");
        if lz < 1e-18 {
            return (h, n - 1);
        }
        h -= mobius_small(n) as f64 * lz / n as f64;
        n += 1;
    }
}

pub fn mertens_h_mobius() -> f64 {
    mertens_h_mobius_terms().0
}

/// Direct-route estimate of H and its guaranteed half-width.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DirectH {
    /// Σ_{p≤L} Σ_{m=2}^{cap} 1/(m·p^m)
    pub finite_sum: f64,
    /// Centre of the interval known to contain H.
    pub value: f64,
    /// Half-width of that interval.
    pub tail_bound: f64,
}

/// Scaled generalized exponential integrals e^x·E_k(x), k = 1, 2, 3.
fn scaled_en(x: f64) -> [f64; 3] {
    let e1 = e1_scaled(x);
    let e2 = 1.0 - x * e1;
    let e3 = (1.0 - x * e2) / 2.0;
    [e1, e2, e3]
}

/// Iₖ = ∫_L^∞ dt/(t(t−1)·lnᵏt) for k = 1, 2, 3.
///
/// With u = ln t the integrand is Σ_{j≥1} e^{−ju}u^{−k}, and
/// ∫_a^∞ e^{−ju}u^{−k} du = a^{1−k}·E_k(ja).
fn log_integrals(l: f64) -> [f64; 3] {
    let a = l.ln();
    let mut out = [0.0; 3];
    for j in 1..=40 {
        let x = j as f64 * a;
        let weight = l.powi(-j);
        let en = scaled_en(x);
        for k in 0..3 {
            out[k] += a.powi(-(k as i32)) * weight * en[k];
        }
        if weight < 1e-25 {
            break;
        }
    }
    out
}

/// Bracket for Σ_{p>L} Σ_{m≥2} 1/(m·p^m).
///
/// The sum is Σ_{p>L} f(p) with f(t) = −ln(1−1/t) − 1/t, and partial
/// summation turns it into ∫_L^∞ (π(t) − π(L))/(t²(t−1)) dt. Explicit
/// bounds for π(t) then bracket the integral: Dusart's
/// t/ln t·(1 + 1/ln t) ≤ π(t) (t ≥ 599) and
/// π(t) ≤ t/ln t·(1 + 1/ln t + 2.51/ln²t) (t ≥ 355991), or Rosser and
/// Schoenfeld's t/ln t ≤ π(t) (t ≥ 17) and π(t) < 1.25506·t/ln t below.
fn prime_tail_bracket(l: f64, pi_l: f64) -> (f64, f64) {
    let [i1, i2, i3] = log_integrals(l);
    let lower = if l >= 599.0 {
        i1 + i2
    } else if l >= 17.0 {
        i1
    } else {
        0.0
    };
    let upper = if l >= 355_991.0 {
        i1 + i2 + 2.51 * i3
    } else {
        1.255_06 * i1
    };
    let f_l = -(-1.0 / l).ln_1p() - 1.0 / l;
    let removed = pi_l * f_l;
    ((lower - removed).max(0.0), upper - removed)
}

pub fn mertens_h_direct(prime_limit: u64, m_cap: u32, table: &ArithTable) -> Result<DirectH> {
    if m_cap < 2 {
        return Err(Error::domain(format!("m_cap must be at least 2, got {m_cap}")));
    }
    if prime_limit < 2 {
        return Err(Error::domain("prime_limit must be at least 2"));
    }
    table.check_covers("prime_limit", prime_limit)?;
    let primes = table.primes_up_to(prime_limit);

    let finite_sum = par::chunked_sum(primes.len(), |i| {
        let inv = 1.0 / primes[i] as f64;
        let mut pw = inv;
        let mut s = 0.0;
        for m in 2..=m_cap {
            pw *= inv;
            if pw < 1e-300 {
                break;
            }
            s += pw / m as f64;
        }
        s
    });

    // every prime's m > cap tail is below p^{−(cap+1)}/((cap+1)(1 − 1/p)), and
    // Σ_p p^{−(cap+1)} < 2^{−(cap+1)} + 2^{−cap}/cap
    let c = m_cap as f64;
    let m_tail = 2.0 / (c + 1.0) * ((-(c + 1.0)).exp2() + (-c).exp2() / c);

    let (t_lo, t_hi) = prime_tail_bracket(prime_limit as f64, primes.len() as f64);
    let lo = finite_sum + t_lo;
    let hi = finite_sum + t_hi + m_tail;
    Ok(DirectH {
        finite_sum,
        value: 0.5 * (lo + hi),
        tail_bound: 0.5 * (hi - lo),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MertensReport {
    pub h_mobius: f64,
    pub h_direct: f64,
    pub agreement: f64,
    pub terms_mobius: u64,
    pub prime_limit_direct: u64,
    pub m_cap_direct: u32,
    pub tail_bound_direct: f64,
}

pub fn mertens_report(prime_limit: u64, m_cap: u32, table: &ArithTable) -> Result<MertensReport> {
    let (h_mobius, terms_mobius) = mertens_h_mobius_terms();
    let direct = mertens_h_direct(prime_limit, m_cap, table)?;
    Ok(MertensReport {
        h_mobius,
        h_direct: direct.value,
        agreement: (h_mobius - direct.value).abs(),
        terms_mobius,
        prime_limit_direct: prime_limit,
        m_cap_direct: m_cap,
        tail_bound_direct: direct.tail_bound,
    })
}

/// Residuals P(1+ρ) − log(1/ρ) + H along a decreasing ρ grid.
pub fn mertens_first_check(rhos: &[f64], table: &ArithTable) -> Result<ResidualScan> {
    if rhos.is_empty() {
        return Err(Error::usage("empty ρ grid"));
    }
    if let Some(r) = rhos.iter().find(|&&r| !(1e-3..=0.5).contains(&r)) {
        return Err(Error::domain(format!("ρ must lie in [1e−3, 0.5], got {r}")));
    }
    if rhos.windows(2).any(|w| !(w[1] < w[0])) {
        return Err(Error::usage("ρ grid must be strictly decreasing"));
    }
    let res: Result<Vec<f64>> = par::map(rhos, |&rho| {
        Ok(prime_zeta(1.0 + rho, table)? + rho.ln() + MERTENS_H)
    })
    .into_iter()
    .collect();
    ResidualScan::from_points(rhos.iter().copied().zip(res?).collect())
}

/// Slope of a least-squares line through the origin.
pub fn slope_through_origin(points: &[(f64, f64)]) -> f64 {
    let sxy: f64 = points.iter().map(|(x, y)| x * y).sum();
    let sxx: f64 = points.iter().map(|(x, _)| x * x).sum();
    sxy / sxx
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SecondTheoremRow {
    pub x: f64,
    /// Σ_{p≤x} 1/p
    pub reciprocal_sum: f64,
    /// the sum minus log log x + γ − H
    pub delta: f64,
    /// 4/log(x+1) + 2/(x log x)
    pub bound: f64,
    pub margin: f64,
}

pub fn mertens_second_rows(xs: &[f64], table: &ArithTable) -> Result<Vec<SecondTheoremRow>> {
    if xs.is_empty() {
        return Err(Error::usage("empty x grid"));
    }
    xs.iter()
        .map(|&x| {
            if !(x >= 3.0) {
                return Err(Error::domain(format!("need x ≥ 3, got {x}")));
            }
            let s = prime_reciprocal_sum(x, table)?;
            let delta = s - x.ln().ln() - EULER_GAMMA + MERTENS_H;
            let bound = 4.0 / (x + 1.0).ln() + 2.0 / (x * x.ln());
            Ok(SecondTheoremRow {
                x,
                reciprocal_sum: s,
                delta,
                bound,
                margin: bound - delta.abs(),
            })
        })
        .collect()
}

/// Smallest bound(x) − |δ(x)| over the grid.
pub fn mertens_second_check(xs: &[f64], table: &ArithTable) -> Result<f64> {
    Ok(mertens_second_rows(xs, table)?
        .iter()
        .map(|r| r.margin)
        .fold(f64::INFINITY, f64::min))
}
