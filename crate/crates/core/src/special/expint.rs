use crate::consts::EULER_GAMMA;
use crate::error::{Error, Result};

/// Below this |x| the positive side uses the power series; above it, the
/// asymptotic series (whose smallest term there is about e^{−40}).
pub const EI_SERIES_RADIUS: f64 = 40.0;

/// Crossover for [`ei_symmetric_combo`] into its asymptotic form.
const COMBO_ASYMPTOTIC_FROM: f64 = 500.0;

const EI_MAX_ABS: f64 = 700.0;

/// e^{y} E₁(y) for y > 0.
pub fn e1_scaled(y: f64) -> f64 {
    debug_assert!(y > 0.0);
    if y <= 1.0 {
        // −γ − ln y − Σ (−y)^k/(k·k!)
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..60 {
            term *= -y / k as f64;
            let contribution = term / k as f64;
            sum += contribution;
            if contribution.abs() < 1e-18 {
                break;
            }
        }
        (-EULER_GAMMA - y.ln() - sum) * y.exp()
    } else {
        // modified Lentz on 1/(y+1− 1²/(y+3− 2²/(y+5− …)))
        const TINY: f64 = 1e-300;
        let mut b = y + 1.0;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..10_000 {
            let an = -((i * i) as f64);
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            let delta = c * d;
            h *= delta;
            if (delta - 1.0).abs() < 1e-16 {
                break;
            }
        }
        h
    }
}

/// e^{−y} Ei(y) for y > 0.
pub fn ei_scaled(y: f64) -> f64 {
    debug_assert!(y > 0.0);
    if y <= EI_SERIES_RADIUS {
        ei_series(y) * (-y).exp()
    } else {
        ei_asymptotic_scaled(y)
    }
}

/// γ + ln x + Σ x^k/(k·k!), for 0 < x ≤ 40.
fn ei_series(x: f64) -> f64 {
    let mut sum = 0.0;
    let mut term = 1.0;
    for k in 1..200 {
        term *= x / k as f64;
        let contribution = term / k as f64;
        sum += contribution;
        if contribution < 1e-17 * sum {
            break;
        }
    }
    EULER_GAMMA + x.ln() + sum
}

/// (1/y) Σ k!/y^k, truncated at the smallest term.
fn ei_asymptotic_scaled(y: f64) -> f64 {
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..200 {
        let next = term * k as f64 / y;
        if next >= term || next < 1e-18 {
            break;
        }
        term = next;
        sum += term;
    }
    sum / y
}

/// Ei(x) = −∫_{−x}^∞ e^{−t}/t dt (principal value for x > 0).
///
/// Positive x: power series for x ≤ 40, asymptotic series beyond.
/// Negative x: Ei(x) = −E₁(−x), with E₁ from its series for |x| ≤ 1 and
/// its continued fraction otherwise (the alternating series cancels badly).
pub fn exp_integral_ei(x: f64) -> Result<f64> {
    if x == 0.0 || !x.is_finite() {
        return Err(Error::domain(
            "Ei has a logarithmic singularity at 0 and needs finite x",
        ));
    }
    if x.abs() > EI_MAX_ABS {
        return Err(Error::domain(format!(
            "|x| = {} exceeds the e^x overflow guard {EI_MAX_ABS}",
            x.abs()
        )));
    }
    if x > 0.0 {
        Ok(if x <= EI_SERIES_RADIUS {
            ei_series(x)
        } else {
            ei_asymptotic_scaled(x) * x.exp()
        })
    } else {
        let y = -x;
        Ok(-e1_scaled(y) * (-y).exp())
    }
}

/// g(y) = e^{y} Ei(−y) + e^{−y} Ei(y), y > 0.
///
/// The two 1/y leading terms cancel and g(y) ~ 2/y². Beyond y = 500 the
/// asymptotic form 2 Σ_{j odd} j!/y^{j+1} is used, cut at its smallest term.
pub fn ei_symmetric_combo(y: f64) -> Result<f64> {
    if !(y > 0.0) || !y.is_finite() {
        return Err(Error::domain(format!("ei_symmetric_combo needs y > 0, got {y}")));
    }
    if y <= COMBO_ASYMPTOTIC_FROM {
        Ok(y.exp() * exp_integral_ei(-y)? + (-y).exp() * exp_integral_ei(y)?)
    } else {
        Ok(combo_asymptotic(y))
    }
}

fn combo_asymptotic(y: f64) -> f64 {
    // term_j = j!/y^{j+1}, j odd; ratio between successive odd j is (j+1)(j+2)/y²
    let y2 = y * y;
    let mut term = 1.0 / y2;
    let mut sum = term;
    let mut j = 1.0;
    loop {
        let next = term * (j + 1.0) * (j + 2.0) / y2;
        if next >= term || next < 1e-18 * sum {
            break;
        }
        term = next;
        sum += term;
        j += 2.0;
    }
    2.0 * sum
}
