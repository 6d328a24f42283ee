//! Independent oracles shared by the integration tests: numerical
//! quadrature and trial-division arithmetic.

#![allow(dead_code)]

use std::f64::consts::PI;

pub const EULER_GAMMA_REF: f64 = 0.577_215_664_901_532_9;

/// Double-exponential quadrature on [a, b], split into pieces whose
/// lengths double away from a so one rule never spans many scales.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> f64 {
    let mut total = 0.0;
    let mut lo = a;
    let mut width = ((b - a) / 1024.0).max(1e-3);
    while lo < b {
        let hi = (lo + width).min(b);
        total += quadrature::integrate(&f, lo, hi, tol).integral;
        lo = hi;
        width *= 2.0;
    }
    total
}

/// ∫₀^∞ t^{2m−1}/(e^{2πt} − 1) dt
pub fn bernoulli_integral(m: u32) -> f64 {
    let k = 2 * m as i32 - 1;
    integrate(|t| t.powi(k) / (2.0 * PI * t).exp_m1(), 0.0, 20.0, 1e-15)
}

/// ∫₀^∞ sin(αt)/(e^{2πt} − 1) dt
pub fn sin_alpha_integral(alpha: f64) -> f64 {
    integrate(|t| (alpha * t).sin() / (2.0 * PI * t).exp_m1(), 0.0, 20.0, 1e-15)
}

/// ∫₀^∞ (1 − cos αt)/(e^{2πt} − 1) dt/t
pub fn cos_alpha_integral(alpha: f64) -> f64 {
    integrate(
        |t| 2.0 * (alpha * t / 2.0).sin().powi(2) / (t * (2.0 * PI * t).exp_m1()),
        0.0,
        20.0,
        1e-15,
    )
}

/// ∫₀^∞ t^{s−1}/(e^t − 1) dt
pub fn mellin_integral(s: f64) -> f64 {
    integrate(|t| t.powf(s - 1.0) / t.exp_m1(), 0.0, 120.0, 1e-14)
}

/// Ei(x) from its defining integral, without any series.
///
/// x < 0: Ei(x) = −∫₀^∞ e^{x(1+s)}/(1+s) ds.
/// x > 0: Ei(x) = γ + ln x + ∫₀^x (e^t − 1)/t dt.
pub fn ei_quadrature(x: f64) -> f64 {
    if x < 0.0 {
        let y = -x;
        let upper = 60.0 / y;
        -integrate(|s| (-y * (1.0 + s)).exp() / (1.0 + s), 0.0, upper, 1e-18)
    } else {
        EULER_GAMMA_REF + x.ln() + integrate(|t| t.exp_m1() / t, 0.0, x, 1e-14)
    }
}

/// Prime factorisation by trial division.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub struct Brute {
    pub d: u64,
    pub mu: i64,
    pub phi: u64,
    pub liouville: i64,
    pub mangoldt: f64,
    pub is_prime: bool,
}

pub fn brute(n: u64) -> Brute {
    let f = factor(n);
    let d = f.iter().map(|&(_, e)| e as u64 + 1).product();
    let omega: u32 = f.iter().map(|&(_, e)| e).sum();
    let mu = if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    };
    let phi = f
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product();
    let mangoldt = if f.len() == 1 { (f[0].0 as f64).ln() } else { 0.0 };
    Brute {
        d,
        mu,
        phi,
        liouville: if omega % 2 == 0 { 1 } else { -1 },
        mangoldt,
        is_prime: f.len() == 1 && f[0].1 == 1,
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Σ d(n)xⁿ with divisor counts from trial division.
pub fn divisor_power_series(x: f64, n_terms: u64) -> f64 {
    let mut s = 0.0;
    let mut xn = 1.0;
    for n in 1..=n_terms {
        xn *= x;
        s += (1..=n).filter(|m| n % m == 0).count() as f64 * xn;
    }
    s
}
