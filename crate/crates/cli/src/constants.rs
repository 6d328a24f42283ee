use lambert_core::consts::{EULER_GAMMA, TWO_GAMMA};
use lambert_core::mertens::mertens_report;

use crate::config::{CliError, RunConfig};
use crate::output::Record;
use crate::record;

/// Largest m in the direct Σ_p Σ_m 1/(m pᵐ).
const DIRECT_M_CAP: u32 = 40;

pub fn run(cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let t = cfg.table()?;
    let r = mertens_report(cfg.table_limit, DIRECT_M_CAP, &t)?;
    Ok(vec![record! {
        "H_mobius" => r.h_mobius,
        "H_direct" => r.h_direct,
        "agreement" => r.agreement,
        "two_gamma" => TWO_GAMMA,
        "gamma" => EULER_GAMMA,
        "provenance" => record! {
            "H_mobius" => format!(
                "−Σ μ(n) log ζ(n)/n for n = 2..={}",
                r.terms_mobius + 1
            ),
            "H_direct" => format!(
                "Σ_(p≤{1}) Σ_(2≤m≤{0}) 1/(m pᵐ) plus a bracketed tail of half-width {2:e}",
                r.m_cap_direct, r.prime_limit_direct, r.tail_bound_direct
            ),
            "agreement" => "|H_mobius − H_direct|",
            "two_gamma" => "2·gamma",
            "gamma" => "frozen literal 0.57721566490153286",
        },
    }])
}
