use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, ToPrimitive};

use crate::arith::ArithTable;
use crate::consts::EULER_GAMMA;
use crate::ddouble::DoubleDouble as DD;
use crate::error::{Error, Result};
use crate::par;
use crate::special::bernoulli_numbers;

use super::{check_decreasing, halving_grid, ResidualScan};

pub const MAX_WIGERT_ORDER: usize = 30;

/// Largest |arg z| accepted by [`wigert_eval`].
pub const WIGERT_MAX_ARG: f64 = 1.2;

/// Smallest Re z for which the direct sums are attempted.
const MIN_RE_Z: f64 = 1e-4;

/// Terms of the expansion that are not odd powers of z.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LeadingTerm {
    /// γ/z
    GammaOverZ,
    /// −(log z)/z
    MinusLogZOverZ,
    /// ¼
    Quarter,
}

/// Σ d(n)e^{−nz} ≈ γ/z − (log z)/z + ¼ − Σ_{n<N} cₙ z^{2n+1}
/// with cₙ = B²_{2n+2}/((2n+2)!·(2n+2)).
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticExpansion {
    pub leading: [LeadingTerm; 3],
    pub odd_coeffs: Vec<BigRational>,
    pub odd_coeffs_f64: Vec<f64>,
    pub order: usize,
}

impl AsymptoticExpansion {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let lead = (Complex64::new(EULER_GAMMA, 0.0) - z.ln()) / z + 0.25;
        let z2 = z * z;
        let mut zp = z;
        let mut tail = Complex64::new(0.0, 0.0);
        for &c in &self.odd_coeffs_f64 {
            tail += zp * c;
            zp *= z2;
        }
        lead - tail
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 || order > MAX_WIGERT_ORDER {
        return Err(Error::Size {
            what: "expansion order",
            requested: order as u64,
            limit: MAX_WIGERT_ORDER as u64,
        });
    }
    Ok(())
}

/// B²_{2m}/((2m)!·2m) for m = 1..=count.
pub fn schlomilch_coefficients(count: usize) -> Result<Vec<BigRational>> {
    if count > MAX_WIGERT_ORDER + 1 {
        return Err(Error::Size {
            what: "coefficient count",
            requested: count as u64,
            limit: MAX_WIGERT_ORDER as u64 + 1,
        });
    }
    let b = bernoulli_numbers(count)?;
    let mut fact = BigInt::one();
    let mut out = Vec::with_capacity(count);
    for m in 1..=count {
        fact *= BigInt::from(2 * m - 1) * BigInt::from(2 * m);
        let b2m = b.exact(2 * m);
        out.push(b2m * b2m / BigRational::from_integer(&fact * BigInt::from(2 * m)));
    }
    Ok(out)
}

pub fn wigert_expansion(order: usize) -> Result<AsymptoticExpansion> {
    check_order(order)?;
    // cₙ is the Schlömilch coefficient with m = n + 1
    let odd_coeffs = schlomilch_coefficients(order)?;
    let odd_coeffs_f64 = odd_coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect();
    Ok(AsymptoticExpansion {
        leading: [
            LeadingTerm::GammaOverZ,
            LeadingTerm::MinusLogZOverZ,
            LeadingTerm::Quarter,
        ],
        odd_coeffs,
        odd_coeffs_f64,
        order,
    })
}

/// The expansion of order N at z, principal branch of log.
pub fn wigert_eval(z: Complex64, order: usize) -> Result<Complex64> {
    let r = z.norm();
    if !(r > 0.0 && r <= 1.0) {
        return Err(Error::domain(format!("need 0 < |z| ≤ 1, got |z| = {r}")));
    }
    if !(z.arg().abs() <= WIGERT_MAX_ARG) {
        return Err(Error::domain(format!(
            "|arg z| = {} exceeds {WIGERT_MAX_ARG}",
            z.arg().abs()
        )));
    }
    Ok(wigert_expansion(order)?.eval(z))
}

/// Σ d(n)e^{−nz}, summed until 2√n·e^{−n Re z} < 1e−18·|partial|.
pub fn dseries_direct(z: Complex64, table: &ArithTable) -> Result<Complex64> {
    check_re(z.re)?;
    let step = (-z).exp();
    let mut pow = Complex64::new(1.0, 0.0);
    let mut sum = Complex64::new(0.0, 0.0);
    for n in 1u64.. {
        pow = if n % 256 == 0 { (-z * n as f64).exp() } else { pow * step };
        table.check_covers("dseries index", n)?;
        sum += pow * table.d(n) as f64;
        let envelope = 2.0 * (n as f64).sqrt() * (-(n as f64) * z.re).exp();
        if envelope < 1e-18 * sum.norm() {
            break;
        }
    }
    Ok(sum)
}

/// Σ_m 1/(e^{mξ} − 1), the same series rearranged; needs no table.
pub fn dseries_lambert(xi: f64) -> Result<f64> {
    check_re(xi)?;
    let mut sum = 0.0;
    for m in 1u64.. {
        let t = 1.0 / (m as f64 * xi).exp_m1();
        sum += t;
        if t < 1e-18 * sum {
            break;
        }
    }
    Ok(sum)
}

fn check_re(re: f64) -> Result<()> {
    if !(re >= MIN_RE_Z) || !re.is_finite() {
        return Err(Error::domain(format!("need Re z ≥ {MIN_RE_Z}, got {re}")));
    }
    Ok(())
}

fn dseries_lambert_dd(xi: f64) -> DD {
    let x = DD::from_f64(xi);
    let mut sum = DD::ZERO;
    for m in 1u64.. {
        let t = (x.mul_f64(m as f64).exp() - DD::ONE).recip();
        sum += t;
        if t.hi < 1e-33 * sum.hi {
            break;
        }
    }
    sum
}

fn bigint_to_dd(b: &BigInt) -> DD {
    let hi = b.to_f64().unwrap_or(f64::NAN);
    let rest = b - BigInt::from_f64(hi).unwrap_or_default();
    DD::from_f64(hi) + DD::from_f64(rest.to_f64().unwrap_or(0.0))
}

fn rational_to_dd(q: &BigRational) -> DD {
    bigint_to_dd(q.numer()) / bigint_to_dd(q.denom())
}

/// γ/ξ − (log ξ)/ξ + ¼ − Σ coeffs[i]·ξ^{2i+1} in double-double.
fn expansion_dd(xi: f64, coeffs: &[BigRational]) -> DD {
    let x = DD::from_f64(xi);
    let mut v = (DD::EULER_GAMMA - x.ln()) / x + DD::from_f64(0.25);
    let x2 = x * x;
    let mut xp = x;
    for c in coeffs {
        v -= rational_to_dd(c) * xp;
        xp *= x2;
    }
    v
}

/// Σ d(n)e^{−nξ} minus the order-N expansion, for real ξ.
///
/// Both sides are formed in double-double: at N = 3 and ξ ≈ 0.006 the
/// residual is 25 orders of magnitude below the series.
pub fn wigert_residual_real(xi: f64, order: usize) -> Result<f64> {
    check_order(order)?;
    check_re(xi)?;
    if xi > 1.0 {
        return Err(Error::domain(format!("need ξ ≤ 1, got {xi}")));
    }
    let coeffs = schlomilch_coefficients(order)?;
    Ok((dseries_lambert_dd(xi) - expansion_dd(xi, &coeffs)).to_f64())
}

/// Σ d(n)e^{−nz} minus the order-N expansion, complex z, plain f64.
pub fn wigert_residual(z: Complex64, order: usize, table: &ArithTable) -> Result<Complex64> {
    let approx = wigert_eval(z, order)?;
    Ok(dseries_direct(z, table)? - approx)
}

/// Real residuals at ξ = start, start/2, … with the fitted slope.
pub fn wigert_residual_scan(order: usize, start: f64, halvings: u32) -> Result<ResidualScan> {
    check_order(order)?;
    let xs = halving_grid(start, halvings);
    let res: Result<Vec<f64>> = par::map(&xs, |&x| wigert_residual_real(x, order))
        .into_iter()
        .collect();
    ResidualScan::from_points(xs.into_iter().zip(res?).collect())
}

/// Σ 1/(e^{mξ}−1) − [γ/ξ − (log ξ)/ξ + ¼ − Σ_{m<k} B²_{2m}/((2m)!2m)·ξ^{2m−1}].
pub fn schlomilch_residual(xi: f64, k: usize) -> Result<f64> {
    if k == 0 || k > 10 {
        return Err(Error::Size {
            what: "Schlömilch order",
            requested: k as u64,
            limit: 10,
        });
    }
    if !(xi > 0.0 && xi <= 0.5) {
        return Err(Error::domain(format!("need 0 < ξ ≤ 0.5, got {xi}")));
    }
    check_re(xi)?;
    let coeffs = schlomilch_coefficients(k - 1)?;
    Ok((dseries_lambert_dd(xi) - expansion_dd(xi, &coeffs)).to_f64())
}

pub fn schlomilch_residual_scan(k: usize, xs: &[f64]) -> Result<ResidualScan> {
    check_decreasing(xs)?;
    let res: Result<Vec<f64>> = par::map(xs, |&x| schlomilch_residual(x, k))
        .into_iter()
        .collect();
    ResidualScan::from_points(xs.iter().copied().zip(res?).collect())
}
