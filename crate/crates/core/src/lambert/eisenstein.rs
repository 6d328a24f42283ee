use crate::error::{Error, Result};

use super::{check_point, fixed_budget_reason, EvalReport, Scalar, StopReason, WideField};

pub const MAX_QSERIES_TERMS: u64 = 10_000;
pub const MAX_CF_DEPTH: u32 = 500;

/// Closest approach to z = 1 the continued fraction accepts.
const CF_EDGE: f64 = 1e-6;

/// Eisenstein's q-series form of the d-series:
///
/// Σ zⁿ/(1−zⁿ) = (z;z)_∞⁻¹ · Σ (−1)ⁿ⁺¹ n z^{n(n+1)/2} / (z;z)ₙ
///
/// with (z;z)ₙ = (1−z)⋯(1−zⁿ). Product and inner sum are both cut at N.
/// The inner sum alternates and cancels heavily near |z| = 1, so real
/// points are evaluated in double-double arithmetic. Even so, past about
/// z = 0.97 the cancellation exceeds the working precision; the error
/// estimate carries a rounding term ε·Σ|term|/|(z;z)_N| that says so.
pub fn eval_eisenstein_qseries<T: Scalar>(z: T, n_terms: u64) -> Result<EvalReport<T>> {
    check_point(z)?;
    if n_terms == 0 {
        return Err(Error::usage("q-series needs at least one term"));
    }
    if n_terms > MAX_QSERIES_TERMS {
        return Err(Error::Size {
            what: "q-series terms",
            requested: n_terms,
            limit: MAX_QSERIES_TERMS,
        });
    }
    let r = z.modulus();
    if r == 0.0 {
        return Ok(EvalReport::zero_point(T::zero()));
    }

    let w = z.to_wide();
    let one = T::Wide::from_real(1.0);
    let mut zk = one;
    let mut poch = one;
    let mut tri = one;
    let mut inner = T::Wide::from_real(0.0);
    let mut magnitude = 0.0;
    for n in 1..=n_terms {
        zk = zk * w;
        poch = poch * (one - zk);
        tri = tri * zk;
        let term = tri * T::Wide::from_real(n as f64) / poch;
        magnitude += term.modulus();
        inner = if n % 2 == 1 { inner + term } else { inner - term };
    }
    let value = inner / poch;

    // first omitted inner term, and the relative error of the cut product
    let zk1 = zk * w;
    let next = (tri * zk1 * T::Wide::from_real((n_terms + 1) as f64) / (poch * (one - zk1)))
        .modulus();
    let product_tail = r.powf((n_terms + 1) as f64) / (1.0 - r);
    let rounding = T::Wide::EPSILON * magnitude / poch.modulus();
    let error_estimate = value.modulus() * product_tail + next / poch.modulus() + rounding;

    let value = T::from_wide(value);
    Ok(EvalReport {
        value,
        terms_used: n_terms,
        stop_reason: fixed_budget_reason(error_estimate, value.modulus()),
        error_estimate,
    })
}

/// Eisenstein's continued fraction for the d-series, cut at depth D.
///
/// With t = 1/z the fraction reads a₁/(b₁ − a₂/(b₂ − a₃/(b₃ − ⋯))) where
/// bₖ = tᵏ − 1, a₁ = 1, a₂ⱼ = tʲ⁻¹(tʲ−1)², a₂ⱼ₊₁ = tʲ(tʲ−1)². The general
/// law is read off the first seven displayed levels. Scaling level k by zᵏ
/// gives the equivalent fraction z/((1−z) − a′₂/((1−z²) − ⋯)) with
/// a′₂ⱼ = zʲ(1−zʲ)² and a′₂ⱼ₊₁ = zʲ⁺¹(1−zʲ)², which stays bounded as z → 0
/// and is what gets evaluated, bottom-up.
pub fn eval_eisenstein_cf(z: f64, depth: u32) -> Result<EvalReport<f64>> {
    if !(z > 0.0 && z <= 1.0 - CF_EDGE) {
        return Err(Error::domain(format!(
            "continued fraction needs 0 < z ≤ 1 − {CF_EDGE}, got {z}"
        )));
    }
    if depth == 0 || depth > MAX_CF_DEPTH {
        return Err(Error::Size {
            what: "continued fraction depth",
            requested: depth as u64,
            limit: MAX_CF_DEPTH as u64,
        });
    }

    let ln_z = z.ln();
    let pow = |k: u32| (k as f64 * ln_z).exp();
    let one_minus_pow = |k: u32| -(k as f64 * ln_z).exp_m1();
    let numerator = |i: u32| {
        let j = i / 2;
        let s = one_minus_pow(j);
        if i % 2 == 0 {
            pow(j) * s * s
        } else {
            pow(j + 1) * s * s
        }
    };
    let truncation = |d: u32| -> Option<f64> {
        let mut f = one_minus_pow(d);
        for k in (1..d).rev() {
            f = one_minus_pow(k) - numerator(k + 1) / f;
            if !f.is_finite() || f.abs() < f64::MIN_POSITIVE {
                return None;
            }
        }
        Some(z / f)
    };

    let (Some(value), Some(previous)) = (
        truncation(depth),
        if depth == 1 { Some(0.0) } else { truncation(depth - 1) },
    ) else {
        return Ok(EvalReport {
            value: f64::NAN,
            terms_used: depth as u64,
            stop_reason: StopReason::DivergenceGuard,
            error_estimate: f64::INFINITY,
        });
    };
    let error_estimate = (value - previous).abs();
    Ok(EvalReport {
        value,
        terms_used: depth as u64,
        stop_reason: fixed_budget_reason(error_estimate, value.abs()),
        error_estimate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambert::{eval_naive, CoeffSource};
    use num_complex::Complex64;

    /// The fraction exactly as displayed, in t = 1/z.
    fn literal_cf(z: f64, depth: u32) -> f64 {
        let t = 1.0 / z;
        let a = |i: u32| -> f64 {
            let j = (i / 2) as i32;
            let s = t.powi(j) - 1.0;
            if i % 2 == 0 {
                t.powi(j - 1) * s * s
            } else {
                t.powi(j) * s * s
            }
        };
        let b = |k: u32| t.powi(k as i32) - 1.0;
        let mut f = b(depth);
        for k in (1..depth).rev() {
            f = b(k) - a(k + 1) / f;
        }
        1.0 / f
    }

    fn naive(x: f64) -> f64 {
        eval_naive(&CoeffSource::one(), x, 1e-16).unwrap().value
    }

    #[test]
    fn qseries_at_origin() {
        assert_eq!(eval_eisenstein_qseries(0.0, 10).unwrap().value, 0.0);
    }

    #[test]
    fn qseries_matches_naive() {
        for &x in &[0.1, 0.4, 0.7, 0.9] {
            let q = eval_eisenstein_qseries(x, 2000).unwrap();
            assert!((q.value - naive(x)).abs() < 1e-11 * naive(x).max(1.0), "x = {x}");
            assert_eq!(q.stop_reason, StopReason::ToleranceMet);
        }
    }

    #[test]
    fn complex_qseries_matches_naive() {
        let z = Complex64::from_polar(0.6, 2.0);
        let q = eval_eisenstein_qseries(z, 500).unwrap();
        let n = eval_naive(&CoeffSource::one(), z, 1e-16).unwrap();
        assert!((q.value - n.value).norm() < 1e-12);
    }

    #[test]
    fn qseries_owns_up_to_lost_digits() {
        let q = eval_eisenstein_qseries(0.99, 5000).unwrap();
        assert_ne!(q.stop_reason, StopReason::ToleranceMet);
        assert!((q.value - naive(0.99)).abs() <= q.error_estimate);
    }

    #[test]
    fn short_qseries_reports_its_error() {
        let q = eval_eisenstein_qseries(0.8, 20).unwrap();
        assert_eq!(q.stop_reason, StopReason::TermCap);
        let truth = naive(0.8);
        assert!((q.value - truth).abs() <= 3.0 * q.error_estimate);
    }

    #[test]
    fn normalized_fraction_equals_displayed_one() {
        for &z in &[0.2, 0.5, 0.8] {
            for depth in 1..=7 {
                let ours = eval_eisenstein_cf(z, depth).unwrap().value;
                let lit = literal_cf(z, depth);
                assert!((ours - lit).abs() < 1e-12 * lit.abs(), "z={z} D={depth}");
            }
        }
    }

    #[test]
    fn first_convergent_is_first_term() {
        for &z in &[0.1, 0.5, 0.9] {
            let v = eval_eisenstein_cf(z, 1).unwrap().value;
            assert!((v - z / (1.0 - z)).abs() < 1e-15);
        }
    }

    #[test]
    fn fraction_matches_naive() {
        assert!((eval_eisenstein_cf(0.2, 30).unwrap().value - naive(0.2)).abs() < 1e-10);
        for &z in &[0.1, 0.3, 0.5] {
            let v = eval_eisenstein_cf(z, 60).unwrap().value;
            assert!((v - naive(z)).abs() < 1e-8);
        }
    }

    #[test]
    fn fraction_converges_at_half() {
        let truth = naive(0.5);
        let errs: Vec<f64> = (1..=60)
            .map(|d| (eval_eisenstein_cf(0.5, d).unwrap().value - truth).abs())
            .collect();
        assert!(errs[59] < 1e-13);
        assert!(errs[40..].iter().all(|&e| e < errs[4]));
    }

    #[test]
    fn fraction_guards() {
        assert!(eval_eisenstein_cf(0.0, 10).is_err());
        assert!(eval_eisenstein_cf(1.0, 10).is_err());
        assert!(eval_eisenstein_cf(0.5, 0).is_err());
        assert!(eval_eisenstein_cf(0.5, 501).is_err());
    }
}
