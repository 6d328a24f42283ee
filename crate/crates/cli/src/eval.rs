use clap::{Args, ValueEnum};
use lambert_core::lambert::{
    eval_clausen_capped, eval_eisenstein_cf, eval_eisenstein_qseries, eval_naive_capped,
    eval_power_series, ArithFn, CoeffSource, Scalar, MAX_CF_DEPTH, MAX_POWER_TERMS,
    MAX_QSERIES_TERMS,
};
use lambert_core::{EvalReport, StopReason};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::config::{CliError, RunConfig};
use crate::output::Record;
use crate::record;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Naive,
    Power,
    Clausen,
    EisensteinQ,
    EisensteinCf,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::Naive => "naive",
            Engine::Power => "power",
            Engine::Clausen => "clausen",
            Engine::EisensteinQ => "eisenstein-q",
            Engine::EisensteinCf => "eisenstein-cf",
        }
    }

    /// Clausen and both Eisenstein forms only sum the divisor series.
    fn needs_unit_coeffs(self) -> bool {
        matches!(self, Engine::Clausen | Engine::EisensteinQ | Engine::EisensteinCf)
    }
}

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Coefficient sequence: one, divisor, mobius, phi, liouville, mangoldt.
    #[arg(long, default_value = "one", value_parser = parse_coeff)]
    pub coeff: ArithFn,

    /// Real part of the evaluation point.
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,

    /// Imaginary part; makes the point complex.
    #[arg(long, allow_hyphen_values = true)]
    pub im: Option<f64>,

    #[arg(long, value_enum, default_value_t = Engine::Naive)]
    pub engine: Engine,
}

pub fn parse_coeff(s: &str) -> Result<ArithFn, String> {
    s.parse::<ArithFn>().map_err(|e| e.to_string())
}

pub fn run(args: &EvalArgs, cfg: &RunConfig) -> Result<(Vec<Record>, Result<(), CliError>), CliError> {
    let table = if args.coeff == ArithFn::One {
        None
    } else {
        Some(cfg.table()?)
    };
    let src = match &table {
        None => CoeffSource::one(),
        Some(t) => CoeffSource::new(args.coeff, t),
    };
    let (value, point, report) = match args.im {
        None => {
            let r = run_engine(args.engine, &src, args.x, cfg)?;
            (json!(r.value), json!(args.x), strip(&r))
        }
        Some(im) => {
            let z = Complex64::new(args.x, im);
            let r = run_engine_complex(args.engine, &src, z, cfg)?;
            (complex(r.value), complex(z), strip(&r))
        }
    };
    let rec = record! {
        "value" => value,
        "terms_used" => report.terms_used,
        "error_estimate" => report.error_estimate,
        "stop_reason" => report.stop_reason.as_str(),
        "engine" => args.engine.name(),
        "point" => point,
        "coeff" => args.coeff.name(),
    };
    let outcome = if cfg.strict && report.stop_reason != StopReason::ToleranceMet {
        Err(CliError::Strict(format!(
            "{} stopped with {} after {} terms; error estimate {:e} misses tolerance {:e}",
            args.engine.name(),
            report.stop_reason.as_str(),
            report.terms_used,
            report.error_estimate,
            cfg.tolerance
        )))
    } else {
        Ok(())
    };
    Ok((vec![rec], outcome))
}

fn complex(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

fn strip<T>(r: &EvalReport<T>) -> EvalReport<()> {
    EvalReport {
        value: (),
        terms_used: r.terms_used,
        stop_reason: r.stop_reason,
        error_estimate: r.error_estimate,
    }
}

/// Terms a geometric-rate series needs before r^N/(1−r) drops below `tol`.
fn geometric_budget(r: f64, tol: f64, cap: u64) -> u64 {
    if r == 0.0 {
        return 1;
    }
    if r >= 1.0 {
        return cap;
    }
    let n = ((tol * (1.0 - r)).ln() / r.ln()).ceil() + 1.0;
    if n.is_finite() {
        (n.max(1.0) as u64).min(cap)
    } else {
        cap
    }
}

/// Fixed-budget engines are judged against the requested tolerance rather
/// than against machine precision.
fn against_tolerance<T: Scalar>(mut r: EvalReport<T>, tol: f64) -> EvalReport<T> {
    if r.stop_reason != StopReason::DivergenceGuard {
        r.stop_reason = if r.error_estimate <= tol * r.value.modulus().max(1.0) {
            StopReason::ToleranceMet
        } else {
            StopReason::TermCap
        };
    }
    r
}

/// Reruns a fixed-budget engine with twice the terms until it meets the
/// tolerance; the geometric budget ignores coefficient growth.
fn grow<T: Scalar>(
    mut n: u64,
    cap: u64,
    tol: f64,
    f: impl Fn(u64) -> lambert_core::Result<EvalReport<T>>,
) -> Result<EvalReport<T>, CliError> {
    loop {
        let r = against_tolerance(f(n)?, tol);
        if r.stop_reason != StopReason::TermCap || n >= cap {
            return Ok(r);
        }
        n = (2 * n).min(cap);
    }
}

fn unit_only(engine: Engine, src: &CoeffSource<'_>) -> Result<(), CliError> {
    if engine.needs_unit_coeffs() && !src.is_one() {
        return Err(CliError::Usage(format!(
            "engine {} only sums the divisor series; use --coeff one",
            engine.name()
        )));
    }
    Ok(())
}

fn run_generic<T: Scalar>(
    engine: Engine,
    src: &CoeffSource<'_>,
    x: T,
    cfg: &RunConfig,
) -> Result<Option<EvalReport<T>>, CliError> {
    let tol = cfg.tolerance;
    let r = x.modulus();
    Ok(Some(match engine {
        Engine::Naive => eval_naive_capped(src, x, tol, cfg.term_cap)?,
        Engine::Power => {
            let cap = cfg.term_cap.min(MAX_POWER_TERMS).min(src.reach());
            grow(geometric_budget(r, tol, cap), cap, tol, |n| {
                eval_power_series(src, x, n)
            })?
        }
        Engine::EisensteinQ => {
            let cap = cfg.term_cap.min(MAX_QSERIES_TERMS);
            grow(geometric_budget(r, tol, cap), cap, tol, |n| eval_eisenstein_qseries(x, n))?
        }
        Engine::Clausen | Engine::EisensteinCf => return Ok(None),
    }))
}

pub fn run_engine(
    engine: Engine,
    src: &CoeffSource<'_>,
    x: f64,
    cfg: &RunConfig,
) -> Result<EvalReport<f64>, CliError> {
    unit_only(engine, src)?;
    if let Some(r) = run_generic(engine, src, x, cfg)? {
        return Ok(r);
    }
    match engine {
        Engine::Clausen => Ok(eval_clausen_capped(x, cfg.tolerance, cfg.term_cap)?),
        Engine::EisensteinCf => run_cf(x, cfg),
        _ => unreachable!("handled by run_generic"),
    }
}

fn run_engine_complex(
    engine: Engine,
    src: &CoeffSource<'_>,
    z: Complex64,
    cfg: &RunConfig,
) -> Result<EvalReport<Complex64>, CliError> {
    unit_only(engine, src)?;
    run_generic(engine, src, z, cfg)?.ok_or_else(|| {
        CliError::Usage(format!("engine {} takes a real point only", engine.name()))
    })
}

/// Doubles the depth until successive approximants agree to tolerance.
fn run_cf(x: f64, cfg: &RunConfig) -> Result<EvalReport<f64>, CliError> {
    let max_depth = (MAX_CF_DEPTH as u64).min(cfg.term_cap) as u32;
    let mut depth = 16.min(max_depth);
    loop {
        let r = against_tolerance(eval_eisenstein_cf(x, depth)?, cfg.tolerance);
        if r.stop_reason != StopReason::TermCap || depth == max_depth {
            return Ok(r);
        }
        depth = (2 * depth).min(max_depth);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_meets_tolerance() {
        for &r in &[0.1, 0.5, 0.9, 0.99] {
            let n = geometric_budget(r, 1e-12, u64::MAX);
            assert!(r.powf(n as f64) / (1.0 - r) <= 1e-12, "r={r}");
        }
        assert_eq!(geometric_budget(0.0, 1e-12, 10), 1);
        assert_eq!(geometric_budget(0.999999, 1e-16, 100), 100);
    }
}
