use std::fmt;
use std::str::FromStr;

use crate::arith::ArithTable;
use crate::error::{Error, Result};

use super::{eval_naive, ArithFn, CoeffSource};

/// The four generating-function identities Σ aₙxⁿ/(1−xⁿ) = closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// Σ μ(n)xⁿ/(1−xⁿ) = x
    Mobius,
    /// Σ φ(n)xⁿ/(1−xⁿ) = x/(1−x)²
    Phi,
    /// Σ λ(n)xⁿ/(1−xⁿ) = Σ x^{n²}
    Liouville,
    /// Σ Λ(n)xⁿ/(1−xⁿ) = Σ log n · xⁿ
    Mangoldt,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::Mobius,
        Identity::Phi,
        Identity::Liouville,
        Identity::Mangoldt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Mobius => "mobius",
            Identity::Phi => "phi",
            Identity::Liouville => "liouville",
            Identity::Mangoldt => "mangoldt",
        }
    }

    pub fn coefficients(self) -> ArithFn {
        match self {
            Identity::Mobius => ArithFn::Mobius,
            Identity::Phi => ArithFn::Totient,
            Identity::Liouville => ArithFn::Liouville,
            Identity::Mangoldt => ArithFn::Mangoldt,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|i| i.name() == s)
            .ok_or_else(|| Error::usage(format!("unknown identity '{s}'")))
    }
}

const MAX_IDENTITY_X: f64 = 0.95;

/// Right-hand side of the identity at x.
pub fn closed_form(id: Identity, x: f64) -> Result<f64> {
    check_x(x)?;
    Ok(match id {
        Identity::Mobius => x,
        Identity::Phi => x / ((1.0 - x) * (1.0 - x)),
        Identity::Liouville => {
            let mut sum = 0.0;
            for n in 1u64.. {
                let t = x.powf((n * n) as f64);
                sum += t;
                if t.abs() < 1e-18 * sum.abs().max(1.0) {
                    break;
                }
            }
            sum
        }
        Identity::Mangoldt => {
            let mut sum = 0.0;
            let mut xn = x;
            for n in 2u64.. {
                xn *= x;
                let t = (n as f64).ln() * xn;
                sum += t;
                if t.abs() < 1e-18 * sum.abs().max(1.0) {
                    break;
                }
            }
            sum
        }
    })
}

/// |Σ aₙxⁿ/(1−xⁿ) − closed form|, the left side summed by [`eval_naive`].
pub fn identity_residual(id: Identity, x: f64, tol: f64, table: &ArithTable) -> Result<f64> {
    check_x(x)?;
    let lhs = eval_naive(&CoeffSource::new(id.coefficients(), table), x, tol)?;
    Ok((lhs.value - closed_form(id, x)?).abs())
}

fn check_x(x: f64) -> Result<()> {
    if !(x.abs() <= MAX_IDENTITY_X) {
        return Err(Error::domain(format!(
            "identity checks need |x| ≤ {MAX_IDENTITY_X}, got {x}"
        )));
    }
    Ok(())
}
