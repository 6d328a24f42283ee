use crate::arith::divisor_convolve_with_one;
use crate::error::{Error, Result};

use super::{
    check_point, check_tolerance, fixed_budget_reason, CoeffSource, EvalReport, Scalar, StopReason,
    UNIT_CIRCLE_GUARD,
};

pub const NAIVE_TERM_CAP: u64 = 1_000_000;
pub const MAX_POWER_TERMS: u64 = 10_000_000;

/// Sub-tolerance terms needed in a row before the naive engine stops.
const QUIET_RUN: u32 = 3;

/// Σ aₙxⁿ/(1 − xⁿ) summed term by term.
///
/// A term counts as small when its tail estimate
/// `max(|aₙ|, 1)·|xⁿ/(1−xⁿ)| / (1 − |x|)` is below `tol·max(1, |partial|)`.
/// The envelope keeps zero runs of μ or Λ from ending the sum early, and the
/// geometric factor accounts for everything after the term, which near
/// |x| = 1 is far more than the term itself. After three small terms in a
/// row the tail estimate of the first omitted term is checked as well and
/// reported as the error estimate.
pub fn eval_naive<T: Scalar>(a: &CoeffSource<'_>, x: T, tol: f64) -> Result<EvalReport<T>> {
    eval_naive_capped(a, x, tol, NAIVE_TERM_CAP)
}

/// [`eval_naive`] with a caller-chosen term cap (at most [`NAIVE_TERM_CAP`]).
pub fn eval_naive_capped<T: Scalar>(
    a: &CoeffSource<'_>,
    x: T,
    tol: f64,
    term_cap: u64,
) -> Result<EvalReport<T>> {
    check_point(x)?;
    check_tolerance(tol)?;
    check_cap(term_cap)?;
    if x.modulus() == 0.0 {
        return Ok(EvalReport::zero_point(T::zero()));
    }
    // one coefficient beyond the last summed term is read for the estimate
    let cap = term_cap.min(a.reach().saturating_sub(1));
    if cap == 0 {
        return Err(Error::OutOfRange {
            what: "coefficient index",
            requested: 2,
            limit: a.reach(),
        });
    }

    let geometric = 1.0 / (1.0 - x.modulus());
    let mut sum = T::zero();
    let mut xn = T::one();
    let mut quiet = 0;
    let mut last_envelope = f64::INFINITY;
    for n in 1..=cap {
        xn *= x;
        let ratio = xn / (T::one() - xn);
        let an = a.get(n)?;
        sum += ratio * T::from_real(an);
        let envelope = an.abs().max(1.0) * ratio.modulus() * geometric;
        last_envelope = envelope;
        let threshold = tol * sum.modulus().max(1.0);
        if envelope < threshold {
            quiet += 1;
        } else {
            quiet = 0;
        }
        if quiet >= QUIET_RUN {
            let next = xn * x;
            let omitted =
                a.get(n + 1)?.abs().max(1.0) * (next / (T::one() - next)).modulus() * geometric;
            if omitted <= threshold {
                return Ok(EvalReport {
                    value: sum,
                    terms_used: n,
                    stop_reason: StopReason::ToleranceMet,
                    error_estimate: omitted,
                });
            }
        }
    }
    Ok(EvalReport {
        value: sum,
        terms_used: cap,
        stop_reason: StopReason::TermCap,
        error_estimate: last_envelope * x.modulus(),
    })
}

fn check_cap(term_cap: u64) -> Result<()> {
    if term_cap == 0 || term_cap > NAIVE_TERM_CAP {
        return Err(Error::usage(format!(
            "term cap must be in 1..={NAIVE_TERM_CAP}, got {term_cap}"
        )));
    }
    Ok(())
}

/// Σ_{n≤N} bₙxⁿ with bₙ = Σ_{m|n} aₘ, by Horner's rule.
pub fn eval_power_series<T: Scalar>(
    a: &CoeffSource<'_>,
    x: T,
    n_terms: u64,
) -> Result<EvalReport<T>> {
    check_point(x)?;
    if n_terms == 0 {
        return Err(Error::usage("power series needs at least one term"));
    }
    if n_terms > MAX_POWER_TERMS {
        return Err(Error::Size {
            what: "power series terms",
            requested: n_terms,
            limit: MAX_POWER_TERMS,
        });
    }
    let b = divisor_convolve_with_one(&a.first(n_terms)?)?;
    let mut acc = T::zero();
    for &bn in b.iter().rev() {
        acc = (acc + T::from_real(bn)) * x;
    }
    let r = x.modulus();
    let last = b.last().copied().unwrap_or(0.0).abs();
    let error_estimate = last * r.powf(n_terms as f64 + 1.0) / (1.0 - r);
    Ok(EvalReport {
        value: acc,
        terms_used: n_terms,
        stop_reason: fixed_budget_reason(error_estimate, acc.modulus()),
        error_estimate,
    })
}

/// Σ xⁿ/(1−xⁿ) through Clausen's rearrangement Σ x^{n²}(1+xⁿ)/(1−xⁿ).
pub fn eval_clausen(x: f64, tol: f64) -> Result<EvalReport<f64>> {
    eval_clausen_capped(x, tol, NAIVE_TERM_CAP)
}

pub fn eval_clausen_capped(x: f64, tol: f64, term_cap: u64) -> Result<EvalReport<f64>> {
    if !(0.0..=1.0 - UNIT_CIRCLE_GUARD).contains(&x) {
        return Err(Error::domain(format!(
            "Clausen form needs 0 ≤ x ≤ 1 − {UNIT_CIRCLE_GUARD}, got {x}"
        )));
    }
    check_tolerance(tol)?;
    check_cap(term_cap)?;
    if x == 0.0 {
        return Ok(EvalReport::zero_point(0.0));
    }
    let term = |n: u64| {
        let xn = x.powf(n as f64);
        let lead = (n as f64 * n as f64 * x.ln()).exp();
        lead * (1.0 + xn) / (1.0 - xn)
    };
    let mut sum = 0.0;
    for n in 1..=term_cap {
        let t = term(n);
        sum += t;
        if t < tol * sum.max(1.0) {
            let omitted = term(n + 1);
            return Ok(EvalReport {
                value: sum,
                terms_used: n,
                stop_reason: StopReason::ToleranceMet,
                error_estimate: omitted,
            });
        }
    }
    Ok(EvalReport {
        value: sum,
        terms_used: term_cap,
        stop_reason: StopReason::TermCap,
        error_estimate: term(term_cap + 1),
    })
}
