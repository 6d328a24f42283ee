use crate::arith::ArithTable;
use crate::error::{Error, Result};

use super::bernoulli::bernoulli_f64;

/// Euler–Maclaurin evaluator for ζ(s), s > 1.
///
/// Sums n^{−s} directly for n < `cutoff` and replaces the tail by the
/// integral, the half-term, and `order` Bernoulli corrections.
#[derive(Clone, Copy, Debug)]
pub struct ZetaEvaluator {
    pub cutoff: u32,
    pub order: usize,
}

impl Default for ZetaEvaluator {
    fn default() -> Self {
        // corrections through B₁₀
        Self {
            cutoff: 50,
            order: 5,
        }
    }
}

/// Smallest s accepted by the evaluator.
pub const ZETA_MIN_S: f64 = 1.0 + 1e-6;

impl ZetaEvaluator {
    /// ζ(s) − 1, computed without forming ζ(s) so that large s keeps full
    /// relative accuracy.
    pub fn eval_minus_one(&self, s: f64) -> Result<f64> {
        if !(s >= ZETA_MIN_S) || !s.is_finite() {
            return Err(Error::domain(format!("zeta needs s ≥ 1 + 1e-6, got {s}")));
        }
        let m = self.cutoff as f64;
        let head: f64 = (2..self.cutoff).rev().map(|n| (n as f64).powf(-s)).sum();

        let m_pow = m.powf(-s);
        let mut tail = m * m_pow / (s - 1.0) + 0.5 * m_pow;
        // B_{2j}/(2j)! · s(s+1)…(s+2j−2) · M^{−s−2j+1}
        let mut rising = s;
        let mut fact = 2.0;
        let mut m_term = m_pow / m;
        for j in 1..=self.order {
            tail += bernoulli_f64(2 * j) / fact * rising * m_term;
            rising *= (s + (2 * j - 1) as f64) * (s + (2 * j) as f64);
            fact *= ((2 * j + 1) * (2 * j + 2)) as f64;
            m_term /= m * m;
        }
        Ok(head + tail)
    }

    pub fn eval(&self, s: f64) -> Result<f64> {
        Ok(1.0 + self.eval_minus_one(s)?)
    }
}

/// ζ(s) for real s ≥ 1 + 1e−6.
pub fn zeta_real(s: f64) -> Result<f64> {
    ZetaEvaluator::default().eval(s)
}

/// ζ(s) − 1.
pub fn zeta_minus_one(s: f64) -> Result<f64> {
    ZetaEvaluator::default().eval_minus_one(s)
}

/// log ζ(s), accurate for large s where ζ(s) − 1 underflows relative to 1.
pub fn log_zeta(s: f64) -> Result<f64> {
    Ok(zeta_minus_one(s)?.ln_1p())
}

/// Prime zeta P(s) = Σ_p p^{−s} via Σ_{n≥1} μ(n)/n · log ζ(ns).
///
/// Summation stops once the bound log ζ(ns)/n falls under 1e−15; zero μ(n)
/// terms do not stop it.
pub fn prime_zeta(s: f64, table: &ArithTable) -> Result<f64> {
    const MIN_TABLE: u64 = 100_000;
    if !(s >= 1.0 + 1e-3) || !s.is_finite() {
        return Err(Error::domain(format!(
            "prime_zeta needs s ≥ 1 + 1e-3, got {s}"
        )));
    }
    if table.limit() < MIN_TABLE {
        return Err(Error::OutOfRange {
            what: "prime_zeta table",
            requested: MIN_TABLE,
            limit: table.limit(),
        });
    }
    let mut total = 0.0;
    for n in 1u64.. {
        let magnitude = log_zeta(n as f64 * s)? / n as f64;
        if magnitude < 1e-15 {
            break;
        }
        total += table.mu(n) as f64 * magnitude;
    }
    Ok(total)
}
