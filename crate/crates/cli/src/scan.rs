use clap::{Args, ValueEnum};
use lambert_core::asymptotics::{
    dseries_lambert, halving_grid, partition_log_check, schlomilch_residual_scan,
    tauber_h, tauber_h_window_mean, tauber_logd_residual, voronoi_breakdown,
    wigert_residual_scan, ResidualScan,
};
use lambert_core::consts::TWO_GAMMA;
use lambert_core::lambert::singularity_probe;
use lambert_core::mertens::{mertens_first_check, mertens_second_rows};
use lambert_core::par;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::config::{CliError, RunConfig};
use crate::output::Record;
use crate::record;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanKind {
    Wigert,
    Schlomilch,
    Voronoi,
    TauberLogd,
    TauberH,
    Partition,
    Singularity,
    #[value(name = "mertens1")]
    Mertens1,
    #[value(name = "mertens2")]
    Mertens2,
}

#[derive(Args, Debug)]
pub struct ScanArgs {
    #[arg(long, value_enum)]
    pub kind: ScanKind,

    /// Expansion order: N for wigert, k for schlomilch.
    #[arg(long, default_value_t = 2)]
    pub order: usize,

    /// First point of a halving grid.
    #[arg(long, default_value_t = 0.2)]
    pub z_start: f64,

    /// Number of halvings; the grid has one more point.
    #[arg(long, default_value_t = 5)]
    pub halvings: u32,

    /// Explicit grid, comma separated. Overrides the per-kind default.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub xs: Vec<f64>,

    /// A single grid point.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "xs")]
    pub x: Option<f64>,

    /// Kernel terms for voronoi.
    #[arg(long, default_value_t = 50)]
    pub terms: u64,

    /// Numerator of the probed root of unity.
    #[arg(long, default_value_t = 1)]
    pub p: u64,

    /// Denominators of the probed roots of unity.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5])]
    pub q: Vec<u64>,

    /// Radii for the singularity probe.
    #[arg(long, value_delimiter = ',', default_values_t = [0.9, 0.99, 0.999])]
    pub rs: Vec<f64>,

    /// Extra coprime pairs p/q (q ≤ 12) drawn from --seed for the probe.
    #[arg(long, default_value_t = 0)]
    pub random: usize,
}

impl ScanArgs {
    fn grid(&self, default: &[f64]) -> Vec<f64> {
        if let Some(x) = self.x {
            vec![x]
        } else if !self.xs.is_empty() {
            self.xs.clone()
        } else {
            default.to_vec()
        }
    }
}

pub fn run(args: &ScanArgs, cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    match args.kind {
        ScanKind::Wigert => {
            let scan = wigert_residual_scan(args.order, args.z_start, args.halvings)?;
            Ok(residual_rows("z", &scan))
        }
        ScanKind::Schlomilch => {
            let xs = args.grid(&halving_grid(args.z_start, args.halvings));
            let scan = schlomilch_residual_scan(args.order, &xs)?;
            Ok(residual_rows("xi", &scan))
        }
        ScanKind::Voronoi => voronoi(args),
        ScanKind::TauberLogd => {
            let xs = args.grid(&[0.1, 0.05, 0.025, 0.0125]);
            collect(par::map(&xs, |&x| {
                Ok(record! { "x" => x, "scaled_residual" => tauber_logd_residual(x)? })
            }))
        }
        ScanKind::TauberH => {
            let t = cfg.table()?;
            let xs = args.grid(&[1e4, 1e5, 1e6]);
            // h(2x) is needed for the window mean, so it is dropped when the
            // table cannot reach it
            collect(par::map(&xs, |&x| {
                let h = tauber_h(x, &t)?;
                let mean = if 2.0 * x <= t.limit() as f64 {
                    Some(tauber_h_window_mean(x, &t)?)
                } else {
                    None
                };
                Ok(record! {
                    "x" => x,
                    "h" => h,
                    "limit" => -TWO_GAMMA,
                    "deviation" => h + TWO_GAMMA,
                    "window_mean" => mean,
                    "window_deviation" => mean.map(|m| m + TWO_GAMMA),
                })
            }))
        }
        ScanKind::Partition => {
            let xs = args.grid(&[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9]);
            collect(par::map(&xs, |&x| {
                let c = partition_log_check(x)?;
                Ok(record! {
                    "x" => c.x,
                    "lhs" => c.lhs,
                    "mid" => c.mid,
                    "rhs" => c.rhs,
                    "lhs_below_mid" => c.lhs < c.mid,
                    "mid_below_rhs" => c.mid < c.rhs,
                    "gap_to_limit" => c.gap_to_limit(),
                })
            }))
        }
        ScanKind::Singularity => singularity(args, cfg),
        ScanKind::Mertens1 => {
            let t = cfg.table()?;
            let rhos = args.grid(&[0.1, 0.05, 0.025, 0.0125, 0.00625]);
            let scan = mertens_first_check(&rhos, &t)?;
            Ok(scan
                .points
                .iter()
                .map(|&(rho, res)| {
                    record! {
                        "rho" => rho,
                        "residual" => res,
                        "residual_over_rho" => res / rho,
                        "slope" => scan.fitted_exponent,
                    }
                })
                .collect())
        }
        ScanKind::Mertens2 => {
            let t = cfg.table()?;
            let xs = args.grid(&[1e3, 1e4, 1e5, 1e6]);
            Ok(mertens_second_rows(&xs, &t)?
                .into_iter()
                .map(|r| {
                    record! {
                        "x" => r.x,
                        "reciprocal_sum" => r.reciprocal_sum,
                        "delta" => r.delta,
                        "bound" => r.bound,
                        "margin" => r.margin,
                    }
                })
                .collect())
        }
    }
}

fn collect(rows: Vec<Result<Record, lambert_core::Error>>) -> Result<Vec<Record>, CliError> {
    rows.into_iter().map(|r| r.map_err(CliError::from)).collect()
}

fn residual_rows(var: &str, scan: &ResidualScan) -> Vec<Record> {
    scan.points
        .iter()
        .map(|&(z, r)| record! { var => z, "residual" => r, "slope" => scan.fitted_exponent })
        .collect()
}

fn voronoi(args: &ScanArgs) -> Result<Vec<Record>, CliError> {
    let xs = args.grid(&[0.2, 0.5, 0.9]);
    collect(par::map(&xs, |&x| {
        let b = voronoi_breakdown(x, args.terms)?;
        let lhs = dseries_lambert(x)?;
        Ok(record! {
            "x" => x,
            "n_terms" => b.n_terms,
            "main" => b.main,
            "kernel_sum" => b.kernel_sum,
            "kernel_tail" => b.kernel_tail,
            "lhs" => lhs,
            "rhs" => b.value(),
            "residual" => (b.value() - lhs).abs(),
            "rhs_truncated" => b.truncated(),
            "residual_truncated" => (b.truncated() - lhs).abs(),
        })
    }))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn singularity(args: &ScanArgs, cfg: &RunConfig) -> Result<Vec<Record>, CliError> {
    let mut pairs: Vec<(u64, u64)> = args.q.iter().map(|&q| (args.p, q)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    while pairs.len() < args.q.len() + args.random {
        let q = rng.gen_range(2..=12u64);
        let p = rng.gen_range(1..q);
        if gcd(p, q) == 1 {
            pairs.push((p, q));
        }
    }
    let jobs: Vec<(u64, u64, f64)> = pairs
        .iter()
        .flat_map(|&(p, q)| args.rs.iter().map(move |&r| (p, q, r)))
        .collect();
    collect(par::map(&jobs, |&(p, q, r)| {
        let s = singularity_probe(p, q, r, cfg.tolerance)?;
        Ok(record! {
            "p" => s.p,
            "q" => s.q,
            "r" => s.r,
            "major_arc" => s.major_arc,
            "minor_arc_re" => s.minor_arc.re,
            "minor_arc_im" => s.minor_arc.im,
            "scaled_modulus" => s.scaled_modulus(),
            "major_lower_bound" => s.major_lower_bound,
            "major_margin" => s.major_arc - s.major_lower_bound,
            "minor_upper_bound" => s.minor_upper_bound,
            "minor_margin" => s.minor_upper_bound - s.minor_arc.norm(),
            "terms_used" => s.terms_used,
        })
    }))
}
