//! Evaluation engines for Lambert series, the closed-form identity
//! residuals, Burhenne's derivative formula and the singularity probe.
//!
//! Five engines compute the same d-series Σ xⁿ/(1 − xⁿ):
//!
//! | engine | form | terms for 1e−14 at x = 0.9 |
//! |---|---|---|
//! | [`eval_naive`] | Σ aₙxⁿ/(1−xⁿ) | ~330 |
//! | [`eval_power_series`] | Σ (Σ_{m\|n} aₘ) xⁿ | fixed N |
//! | [`eval_clausen`] | Σ x^{n²}(1+xⁿ)/(1−xⁿ) | ~19 |
//! | [`eval_eisenstein_qseries`] | q-Pochhammer quotient | fixed N |
//! | [`eval_eisenstein_cf`] | continued fraction | fixed depth |
//!
//! The first two accept any coefficient sequence; the rest are specific to
//! aₙ ≡ 1.

mod burhenne;
mod coeffs;
mod eisenstein;
mod engines;
mod identities;
mod singularity;

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub};

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::ddouble::DoubleDouble;

pub use burhenne::{
    burhenne_column_sum_exact, burhenne_fk_derivative, burhenne_fk_derivative_exact,
    BURHENNE_EXACT_MAX, BURHENNE_FLOAT_MAX,
};
pub use coeffs::{ArithFn, CoeffSource};
pub use eisenstein::{eval_eisenstein_cf, eval_eisenstein_qseries, MAX_CF_DEPTH, MAX_QSERIES_TERMS};
pub use engines::{
    eval_clausen, eval_clausen_capped, eval_naive, eval_naive_capped, eval_power_series,
    MAX_POWER_TERMS, NAIVE_TERM_CAP,
};
pub use identities::{closed_form, identity_residual, Identity};
pub use singularity::{divergence_profile, singularity_probe, SingularityProbe};

/// Closest approach to the unit circle any engine accepts.
pub const UNIT_CIRCLE_GUARD: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    ToleranceMet,
    TermCap,
    DivergenceGuard,
}

impl StopReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StopReason::ToleranceMet => "tolerance_met",
            StopReason::TermCap => "term_cap",
            StopReason::DivergenceGuard => "divergence_guard",
        }
    }
}

/// Outcome of a series evaluation.
///
/// `error_estimate` is the magnitude of the first omitted term (or the
/// engine's analogue). With `ToleranceMet` it is at most
/// `tol · max(1, |value|)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalReport<T> {
    pub value: T,
    pub terms_used: u64,
    pub stop_reason: StopReason,
    pub error_estimate: f64,
}

impl<T> EvalReport<T> {
    fn zero_point(value: T) -> Self {
        Self {
            value,
            terms_used: 1,
            stop_reason: StopReason::ToleranceMet,
            error_estimate: 0.0,
        }
    }
}

/// Fixed-budget engines (power series, q-series, continued fraction) report
/// `ToleranceMet` when their error estimate is below machine precision.
fn fixed_budget_reason(error_estimate: f64, value_modulus: f64) -> StopReason {
    if error_estimate <= f64::EPSILON * value_modulus.max(1.0) {
        StopReason::ToleranceMet
    } else {
        StopReason::TermCap
    }
}

/// Real or complex evaluation point.
pub trait Scalar:
    Copy
    + Debug
    + Send
    + Sync
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + AddAssign
    + MulAssign
    + 'static
{
    /// Extended-precision twin used by cancellation-prone engines.
    type Wide: WideField;

    fn from_real(x: f64) -> Self;
    fn modulus(self) -> f64;
    fn to_wide(self) -> Self::Wide;
    fn from_wide(w: Self::Wide) -> Self;
}

/// Arithmetic needed by the q-series engine.
pub trait WideField:
    Copy
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Unit roundoff.
    const EPSILON: f64;

    fn from_real(x: f64) -> Self;
    fn modulus(self) -> f64;
}

impl Scalar for f64 {
    type Wide = DoubleDouble;

    fn from_real(x: f64) -> Self {
        x
    }
    fn modulus(self) -> f64 {
        self.abs()
    }
    fn to_wide(self) -> DoubleDouble {
        DoubleDouble::from_f64(self)
    }
    fn from_wide(w: DoubleDouble) -> Self {
        w.to_f64()
    }
}

impl Scalar for Complex64 {
    // no wider complex type; complex points run in plain f64
    type Wide = Complex64;

    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
    fn to_wide(self) -> Complex64 {
        self
    }
    fn from_wide(w: Complex64) -> Self {
        w
    }
}

impl WideField for DoubleDouble {
    const EPSILON: f64 = 4.930_380_657_631_324e-32; // 2^-104

    fn from_real(x: f64) -> Self {
        DoubleDouble::from_f64(x)
    }
    fn modulus(self) -> f64 {
        self.abs().to_f64()
    }
}

impl WideField for Complex64 {
    const EPSILON: f64 = f64::EPSILON;

    fn from_real(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn modulus(self) -> f64 {
        self.norm()
    }
}

fn check_point<T: Scalar>(x: T) -> crate::Result<()> {
    let m = x.modulus();
    if !m.is_finite() || m > 1.0 - UNIT_CIRCLE_GUARD {
        return Err(crate::Error::domain(format!(
            "|x| = {m} must be at most 1 − {UNIT_CIRCLE_GUARD}"
        )));
    }
    Ok(())
}

fn check_tolerance(tol: f64) -> crate::Result<()> {
    if !(tol > 0.0) || !tol.is_finite() {
        return Err(crate::Error::domain(format!(
            "tolerance must be a positive finite number, got {tol}"
        )));
    }
    Ok(())
}
