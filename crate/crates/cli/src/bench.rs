//! Engines side by side on the divisor series.
//!
//! Achieved error is measured against a power series run to 1e−16. The
//! winner at each x is the engine meeting the tolerance with the fewest
//! terms; ties go to the engine listed first. Wall times are the only
//! fields that differ between identical runs.

use std::time::Instant;

use clap::Args;
use lambert_core::lambert::{eval_power_series, CoeffSource, MAX_POWER_TERMS};

use crate::config::{CliError, RunConfig};
use crate::eval::{run_engine, Engine};
use crate::output::Record;
use crate::record;

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// At least two engines, comma separated.
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub engines: Vec<Engine>,

    #[arg(long, value_delimiter = ',', default_values_t = [0.1, 0.5, 0.9])]
    pub xs: Vec<f64>,
}

fn reference(x: f64) -> Result<f64, CliError> {
    let r = x.abs();
    let n = ((1e-17 * (1.0 - r)).ln() / r.ln()).ceil().max(1.0) as u64 + 1;
    Ok(eval_power_series(&CoeffSource::one(), x, n.min(MAX_POWER_TERMS))?.value)
}

pub fn run(args: &BenchArgs, cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let mut engines = args.engines.clone();
    engines.dedup();
    if engines.len() < 2 {
        return Err(CliError::Usage("bench needs at least two distinct engines".into()));
    }
    if args.xs.is_empty() {
        return Err(CliError::Usage("empty x grid".into()));
    }
    let one = CoeffSource::one();
    let mut rows = Vec::new();
    for &x in &args.xs {
        let truth = reference(x)?;
        let mut block = Vec::new();
        for &e in &engines {
            let start = Instant::now();
            let rep = run_engine(e, &one, x, cfg)?;
            let wall_ns = start.elapsed().as_nanos() as u64;
            let achieved = (rep.value - truth).abs();
            let met = achieved <= cfg.tolerance * truth.abs().max(1.0);
            block.push((e, rep, wall_ns, achieved, met));
        }
        let winner = block
            .iter()
            .filter(|b| b.4)
            .min_by_key(|b| b.1.terms_used)
            .map(|b| b.0);
        for (e, rep, wall_ns, achieved, met) in block {
            rows.push(record! {
                "x" => x,
                "engine" => e.name(),
                "value" => rep.value,
                "terms_used" => rep.terms_used,
                "stop_reason" => rep.stop_reason.as_str(),
                "wall_ns" => wall_ns,
                "achieved_error" => achieved,
                "meets_tolerance" => met,
                "winner" => winner == Some(e),
            });
        }
    }
    Ok(rows)
}
